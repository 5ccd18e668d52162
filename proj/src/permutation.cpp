#include "tabloid/permutation.hpp"

#include <cctype>

#include "tabloid/ballot.hpp"
#include "tabloid/error.hpp"

namespace tabloid {

Permutation::Permutation(std::vector<std::size_t> image) : image_(std::move(image)) {
  std::vector<bool> hit(image_.size(), false);
  for (std::size_t v : image_) {
    if (v >= image_.size() || hit[v]) throw ValidationError("permutation is not a bijection");
    hit[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> image(n);
  for (std::size_t i = 0; i < n; ++i) image[i] = i;
  return Permutation(std::move(image));
}

Permutation Permutation::transposition(std::size_t n, std::size_t i, std::size_t j) {
  if (i >= n || j >= n) throw ValidationError("transposition index out of range");
  auto image = identity(n).image_;
  std::swap(image[i], image[j]);
  return Permutation(std::move(image));
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) inv[image_[i]] = i;
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (image_[i] != i) return false;
  }
  return true;
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
  if (outer.size() != inner.size()) throw ValidationError("cannot compose permutations of different sizes");
  std::vector<std::size_t> image(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) image[i] = outer(inner(i));
  return Permutation(std::move(image));
}

Permutation parse_cycles(const CandidateSet& candidates, std::string_view text) {
  const std::size_t n = candidates.size();
  std::vector<std::size_t> image(n);
  for (std::size_t i = 0; i < n; ++i) image[i] = i;
  std::vector<bool> used(n, false);

  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_space();
  while (pos < text.size()) {
    if (text[pos] != '(') throw ValidationError("expected '(' in cycle notation: " + std::string(text));
    ++pos;
    std::vector<std::size_t> cycle;
    while (true) {
      skip_space();
      if (pos >= text.size()) throw ValidationError("unterminated cycle: " + std::string(text));
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      std::size_t start = pos;
      while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) && text[pos] != ')' &&
             text[pos] != ',') {
        ++pos;
      }
      const std::size_t x = candidates.index_of(text.substr(start, pos - start));
      if (used[x]) throw ValidationError("candidate repeated across cycles: " + candidates.name(x));
      used[x] = true;
      cycle.push_back(x);
      if (pos < text.size() && text[pos] == ',') ++pos;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) image[cycle[i]] = cycle[(i + 1) % cycle.size()];
    skip_space();
  }
  return Permutation(std::move(image));
}

std::string format_cycles(const CandidateSet& candidates, const Permutation& perm) {
  std::string out;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i] || perm(i) == i) continue;
    out += '(';
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += ' ';
      out += candidates.name(j);
      first = false;
      j = perm(j);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

}  // namespace tabloid
