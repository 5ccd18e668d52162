#pragma once

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "tabloid/profile.hpp"

namespace tabloid {

// Points awarded for each place 1..m (stored 0-based).
class WeightVector {
 public:
  WeightVector() = default;
  explicit WeightVector(std::vector<Rational> weights);

  std::size_t size() const noexcept { return weights_.size(); }
  const Rational& operator[](std::size_t place) const { return weights_[place]; }
  std::span<const Rational> values() const noexcept { return weights_; }

  // True when w lies on the line spanned by the all-ones vector.
  bool is_trivial() const;
  void require_compatible(const BallotSpace& space) const;

  bool operator==(const WeightVector&) const = default;

 private:
  std::vector<Rational> weights_;
};

// Candidate index -> score.
struct Scoreboard {
  std::vector<Rational> scores;

  const Rational& operator[](std::size_t candidate) const { return scores[candidate]; }
  std::size_t size() const noexcept { return scores.size(); }
  bool operator==(const Scoreboard&) const = default;
};

// Tiers of tied candidates, best first. Candidates within a tier keep index order.
struct WeakOrdering {
  std::vector<std::vector<std::size_t>> tiers;

  bool operator==(const WeakOrdering&) const = default;
};

// k x n table whose column X holds F(delta_b)(X).
class LinearCWFMatrix {
 public:
  LinearCWFMatrix(std::uint64_t rows, std::size_t cols);

  std::uint64_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Rational& at(std::uint64_t ballot, std::size_t candidate) { return data_[ballot * cols_ + candidate]; }
  const Rational& at(std::uint64_t ballot, std::size_t candidate) const { return data_[ballot * cols_ + candidate]; }

 private:
  std::uint64_t rows_;
  std::size_t cols_;
  std::vector<Rational> data_;
};

// v_{w,X}: coefficient w(b(X)) at every ballot b.
Profile positional_vector(const SpacePtr& space, const WeightVector& w, std::size_t x);
// v_{X>Y} = v_{w,X} - v_{w,Y}.
Profile v_diff(const SpacePtr& space, const WeightVector& w, std::size_t x, std::size_t y);

// score(X) = p . v_{w,X}, computed from p's support without forming v_{w,X}.
Scoreboard tally(const WeightVector& w, const Profile& p);

WeakOrdering ranking(const Scoreboard& scores);

enum class Contest { FirstWins, SecondWins, Tie };

struct HeadToHead {
  Contest outcome;
  PairCounts counts;  // p . a_{X>Y}, p . a_{Y>X}
};
// Sign of p . r_{X>Y}.
HeadToHead head_to_head(const Profile& p, std::size_t x, std::size_t y);

// The matrix of B_w: column X is v_{w,X}.
LinearCWFMatrix positional_matrix(const SpacePtr& space, const WeightVector& w);

// An entry of F contradicting F(delta_b)(X) = w(b(X)).
struct NotNeutral {
  std::uint64_t ballot;
  std::size_t candidate;
  Rational expected;
  Rational actual;
};

// Recovers w from a neutral linear CWF given as a matrix, or reports the
// first entry that no positional method can produce.
std::variant<WeightVector, NotNeutral> reconstruct_weight(const BallotSpace& space, const LinearCWFMatrix& f);

}  // namespace tabloid
