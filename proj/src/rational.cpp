#include "tabloid/rational.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <string>

#include "tabloid/error.hpp"

namespace tabloid {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Rational parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw ValidationError("malformed rational '" + std::string(whole) + "'");
  mpz_class z(std::string(s), 10);
  return Rational(negative ? mpz_class(-z) : z);
}

Rational parse_decimal(std::string_view s, std::string_view whole) {
  auto bad = [&] { return ValidationError("malformed rational '" + std::string(whole) + "'"); };
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_text = s.substr(e + 1);
    if (!exp_text.empty() && exp_text.front() == '+') exp_text.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(exp_text.data(), exp_text.data() + exp_text.size(), exponent);
    if (ec != std::errc() || ptr != exp_text.data() + exp_text.size()) throw bad();
    s = s.substr(0, e);
  }
  std::string digits;
  std::string_view int_part = s;
  std::string_view frac_part;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    int_part = s.substr(0, dot);
    frac_part = s.substr(dot + 1);
  }
  if (int_part.empty() && frac_part.empty()) throw bad();
  if (!int_part.empty() && !all_digits(int_part)) throw bad();
  if (!frac_part.empty() && !all_digits(frac_part)) throw bad();
  digits.append(int_part);
  digits.append(frac_part);
  exponent -= static_cast<long>(frac_part.size());
  if (exponent > 4096 || exponent < -4096) throw bad();

  mpz_class numerator(digits, 10);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
  Rational result;
  if (exponent >= 0) {
    result = Rational(numerator * scale);
  } else {
    result = Rational(numerator, scale);
    result.canonicalize();
  }
  return negative ? Rational(-result) : result;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) throw ValidationError("empty rational");
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    Rational num = parse_integer(trim(s.substr(0, slash)), text);
    std::string_view den_text = trim(s.substr(slash + 1));
    if (!all_digits(den_text)) throw ValidationError("malformed rational '" + std::string(text) + "'");
    mpz_class den(std::string(den_text), 10);
    if (den == 0) throw ValidationError("zero denominator in '" + std::string(text) + "'");
    Rational result(num.get_num(), den);
    result.canonicalize();
    return result;
  }
  if (s.find_first_of(".eE") != std::string_view::npos) return parse_decimal(s, text);
  return parse_integer(s, text);
}

std::string to_string(const Rational& value) { return value.get_str(10); }

Rational rational_from_double(double value) {
  if (!std::isfinite(value)) throw ValidationError("non-finite number where a rational is required");
  char buffer[64];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  if (ec != std::errc()) throw ValidationError("cannot format number");
  return parse_rational(std::string_view(buffer, static_cast<std::size_t>(ptr - buffer)));
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> values;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view item = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    values.push_back(parse_rational(item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return values;
}

Rational sum(std::span<const Rational> values) {
  Rational total = 0;
  for (const auto& v : values) total += v;
  return total;
}

}  // namespace tabloid
