#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tabloid {

using Rational = mpq_class;

// Accepts integers ("-3"), fractions ("1/2"), and decimals ("0.7", "2.5e-1").
// The result is exact; decimals are read as base-10 fractions.
Rational parse_rational(std::string_view text);

// Canonical text: "3", "-1/2". Round-trips through parse_rational.
std::string to_string(const Rational& value);

// Exact conversion of a double via its shortest round-trip decimal form,
// so 0.7 becomes 7/10 rather than the nearest binary fraction.
Rational rational_from_double(double value);

inline int sign(const Rational& value) { return sgn(value); }

inline double to_double(const Rational& value) { return value.get_d(); }

// Comma-separated rationals: "3,2,1" or "1,1/2,0".
std::vector<Rational> parse_rational_list(std::string_view text);

Rational sum(std::span<const Rational> values);

}  // namespace tabloid
