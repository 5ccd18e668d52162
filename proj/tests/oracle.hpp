#pragma once

// Brute-force reference computations used by the tests. Nothing here calls
// rank, unrank, advance or the kernels.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tabloid/positional.hpp"
#include "tabloid/profile.hpp"

namespace oracle {

using tabloid::Rational;
using Rows = std::vector<std::uint16_t>;

// All row assignments with the given row sizes, candidate 0 varying slowest.
inline std::vector<Rows> ballots(const std::vector<std::size_t>& parts) {
  std::size_t n = 0;
  for (auto p : parts) n += p;
  std::vector<Rows> out;
  Rows current(n);
  std::vector<std::size_t> left = parts;
  auto fill = [&](auto&& self, std::size_t c) -> void {
    if (c == n) {
      out.push_back(current);
      return;
    }
    for (std::size_t r = 0; r < left.size(); ++r) {
      if (left[r] == 0) continue;
      --left[r];
      current[c] = static_cast<std::uint16_t>(r);
      self(self, c + 1);
      ++left[r];
    }
  };
  fill(fill, 0);
  return out;
}

inline std::vector<Rational> dense(const tabloid::Profile& p) {
  std::vector<Rational> out(p.space().size(), 0);
  for (const auto& t : p.terms()) out[t.index] = t.coefficient;
  return out;
}

inline Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// r_{X>Y} over a brute-force ballot list.
inline std::vector<Rational> r_vector(const std::vector<Rows>& all, std::size_t x, std::size_t y) {
  std::vector<Rational> out;
  for (const auto& b : all) out.push_back(b[x] < b[y] ? 1 : b[x] > b[y] ? -1 : 0);
  return out;
}

inline std::vector<Rational> score_vector(const std::vector<Rows>& all, const std::vector<Rational>& w, std::size_t x) {
  std::vector<Rational> out;
  for (const auto& b : all) out.push_back(w[b[x]]);
  return out;
}

// All compositions (ordered) of n.
inline std::vector<std::vector<std::size_t>> compositions(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
    std::vector<std::size_t> parts;
    std::size_t run = 1;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (mask >> i & 1) {
        parts.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    parts.push_back(run);
    out.push_back(parts);
  }
  return out;
}

inline Rational random_rational(std::mt19937_64& rng, int span = 9, int max_den = 4) {
  std::uniform_int_distribution<int> num(-span, span);
  std::uniform_int_distribution<int> den(1, max_den);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

inline std::vector<Rational> random_weights(std::mt19937_64& rng, std::size_t m, bool nontrivial = true) {
  while (true) {
    std::vector<Rational> w;
    for (std::size_t i = 0; i < m; ++i) w.push_back(random_rational(rng));
    if (!nontrivial || m < 2) return w;
    for (std::size_t i = 1; i < m; ++i) {
      if (w[i] != w[0]) return w;
    }
  }
}

inline tabloid::Profile random_profile(std::mt19937_64& rng, const tabloid::SpacePtr& space, std::size_t support = 6) {
  std::uniform_int_distribution<std::uint64_t> ballot(0, space->size() - 1);
  std::vector<tabloid::Profile::Term> terms;
  for (std::size_t i = 0; i < support; ++i) terms.push_back({ballot(rng), random_rational(rng)});
  return tabloid::Profile(space, std::move(terms));
}

inline std::string name(const std::vector<std::size_t>& parts) {
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
  return s + ")";
}

}  // namespace oracle
