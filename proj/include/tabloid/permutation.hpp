#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace tabloid {

class CandidateSet;

// A bijection of candidate indices {0, ..., n-1}. Composition is ordinary
// function composition: compose(f, g)(i) == f(g(i)).
class Permutation {
 public:
  explicit Permutation(std::vector<std::size_t> image);

  static Permutation identity(std::size_t n);
  static Permutation transposition(std::size_t n, std::size_t i, std::size_t j);

  std::size_t operator()(std::size_t i) const { return image_[i]; }
  std::size_t size() const noexcept { return image_.size(); }
  const std::vector<std::size_t>& image() const noexcept { return image_; }

  Permutation inverse() const;
  bool is_identity() const;

  friend Permutation compose(const Permutation& outer, const Permutation& inner);
  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<std::size_t> image_;
};

// Cycle notation over candidate names, e.g. "(A B)(C D)". "" and "()" are the identity.
Permutation parse_cycles(const CandidateSet& candidates, std::string_view text);
std::string format_cycles(const CandidateSet& candidates, const Permutation& perm);

}  // namespace tabloid
