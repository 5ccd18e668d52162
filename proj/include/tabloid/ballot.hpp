#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tabloid/permutation.hpp"

namespace tabloid {

inline constexpr std::uint64_t default_size_cap = 10'000'000;

class CandidateSet {
 public:
  explicit CandidateSet(std::vector<std::string> names);

  // A, B, C, ... for n <= 26, otherwise C1, C2, ...
  static CandidateSet standard(std::size_t n);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  std::optional<std::size_t> find(std::string_view name) const;
  // Throws ValidationError for unknown names.
  std::size_t index_of(std::string_view name) const;

  bool operator==(const CandidateSet&) const = default;

 private:
  std::vector<std::string> names_;
};

// Multinomial n! / prod(parts_i!). Throws ValidationError past 2^64 - 1.
std::uint64_t multinomial(std::span<const std::size_t> parts);

// The shape (lambda_1, ..., lambda_m) of a partially ranked ballot.
class Composition {
 public:
  explicit Composition(std::vector<std::size_t> parts);

  const std::vector<std::size_t>& parts() const noexcept { return parts_; }
  std::size_t part(std::size_t i) const { return parts_.at(i); }
  std::size_t part_count() const noexcept { return parts_.size(); }
  std::size_t total() const noexcept { return total_; }
  std::uint64_t ballot_count() const noexcept { return ballot_count_; }

  bool operator==(const Composition& other) const { return parts_ == other.parts_; }

 private:
  std::vector<std::size_t> parts_;
  std::size_t total_ = 0;
  std::uint64_t ballot_count_ = 0;
};

// A tabloid: candidate index -> 0-based row. Lexicographic comparison on the
// row tuple is the canonical enumeration order.
class Ballot {
 public:
  Ballot() = default;
  explicit Ballot(std::vector<std::uint16_t> rows) : rows_(std::move(rows)) {}

  std::size_t row(std::size_t candidate) const { return rows_[candidate]; }
  const std::vector<std::uint16_t>& rows() const noexcept { return rows_; }
  std::vector<std::uint16_t>& mutable_rows() noexcept { return rows_; }

  bool operator==(const Ballot&) const = default;
  auto operator<=>(const Ballot&) const = default;

 private:
  std::vector<std::uint16_t> rows_;
};

// The ballot set C_lambda for a fixed candidate list and composition.
class BallotSpace {
 public:
  BallotSpace(CandidateSet candidates, Composition composition, std::uint64_t cap = default_size_cap);

  static std::shared_ptr<const BallotSpace> make(CandidateSet candidates, Composition composition,
                                                 std::uint64_t cap = default_size_cap);

  const CandidateSet& candidates() const noexcept { return candidates_; }
  const Composition& composition() const noexcept { return composition_; }
  std::size_t candidate_count() const noexcept { return candidates_.size(); }
  std::size_t row_count() const noexcept { return composition_.part_count(); }
  std::uint64_t size() const noexcept { return composition_.ballot_count(); }
  std::uint64_t cap() const noexcept { return cap_; }

  // Throws CapExceeded when k is above the cap.
  void require_within_cap() const;
  void require_candidate(std::size_t candidate) const;
  void require_distinct_pair(std::size_t x, std::size_t y) const;

  std::vector<Ballot> enumerate() const;
  Ballot first() const;
  // Steps to the next ballot in canonical order; false after the last one.
  static bool advance(Ballot& ballot);

  std::uint64_t rank(const Ballot& ballot) const;
  Ballot unrank(std::uint64_t index) const;
  void validate(const Ballot& ballot) const;

  // 1-based row of a candidate, as in the evaluation map.
  std::size_t evaluate(const Ballot& ballot, std::size_t candidate) const;
  std::size_t evaluate(const Ballot& ballot, std::string_view candidate) const;

  // (tau . b)(X) = b(tau(X)).
  Ballot permute(const Permutation& tau, const Ballot& ballot) const;

  Ballot from_rows(const std::vector<std::vector<std::string>>& rows) const;
  // Rows as name lists; names within a row follow candidate order.
  std::vector<std::vector<std::string>> to_rows(const Ballot& ballot) const;
  // Compact display form, e.g. "A B | C D".
  std::string format(const Ballot& ballot) const;

  // Number of ballots with X in row i and Y in row j (0-based rows, X != Y).
  std::uint64_t pair_placement_count(std::size_t row_x, std::size_t row_y) const;
  // Number of ballots with a given candidate in row i.
  std::uint64_t placement_count(std::size_t row) const;

  bool operator==(const BallotSpace& other) const {
    return candidates_ == other.candidates_ && composition_ == other.composition_;
  }

 private:
  CandidateSet candidates_;
  Composition composition_;
  std::uint64_t cap_;
};

using SpacePtr = std::shared_ptr<const BallotSpace>;

}  // namespace tabloid
