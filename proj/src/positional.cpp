#include "tabloid/positional.hpp"

#include <algorithm>
#include <numeric>

#include "tabloid/error.hpp"
#include "tabloid/kernels.hpp"

namespace tabloid {

WeightVector::WeightVector(std::vector<Rational> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) throw ValidationError("weight vector must have at least one entry");
}

bool WeightVector::is_trivial() const {
  return std::all_of(weights_.begin(), weights_.end(), [&](const Rational& v) { return v == weights_.front(); });
}

void WeightVector::require_compatible(const BallotSpace& space) const {
  if (size() != space.row_count()) {
    throw ValidationError("weight vector has " + std::to_string(size()) + " entries, composition has " +
                          std::to_string(space.row_count()) + " parts");
  }
}

LinearCWFMatrix::LinearCWFMatrix(std::uint64_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

Profile positional_vector(const SpacePtr& space, const WeightVector& w, std::size_t x) {
  w.require_compatible(*space);
  space->require_candidate(x);
  return kernels::materialize(space, [&w, x](const Ballot& b) { return w[b.row(x)]; });
}

Profile v_diff(const SpacePtr& space, const WeightVector& w, std::size_t x, std::size_t y) {
  w.require_compatible(*space);
  space->require_distinct_pair(x, y);
  return kernels::materialize(space, [&w, x, y](const Ballot& b) { return Rational(w[b.row(x)] - w[b.row(y)]); });
}

Scoreboard tally(const WeightVector& w, const Profile& p) {
  w.require_compatible(p.space());
  return Scoreboard{kernels::tally(p, w.values())};
}

WeakOrdering ranking(const Scoreboard& scores) {
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });
  WeakOrdering result;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i == 0 || scores[order[i]] != scores[order[i - 1]]) result.tiers.emplace_back();
    result.tiers.back().push_back(order[i]);
  }
  return result;
}

HeadToHead head_to_head(const Profile& p, std::size_t x, std::size_t y) {
  PairCounts counts = pair_counts(p, x, y);
  const int s = sign(counts.margin());
  const Contest outcome = s > 0 ? Contest::FirstWins : s < 0 ? Contest::SecondWins : Contest::Tie;
  return HeadToHead{outcome, std::move(counts)};
}

LinearCWFMatrix positional_matrix(const SpacePtr& space, const WeightVector& w) {
  w.require_compatible(*space);
  space->require_within_cap();
  LinearCWFMatrix matrix(space->size(), space->candidate_count());
  Ballot b = space->first();
  std::uint64_t i = 0;
  do {
    for (std::size_t x = 0; x < space->candidate_count(); ++x) matrix.at(i, x) = w[b.row(x)];
    ++i;
  } while (BallotSpace::advance(b));
  return matrix;
}

std::variant<WeightVector, NotNeutral> reconstruct_weight(const BallotSpace& space, const LinearCWFMatrix& f) {
  if (f.rows() != space.size() || f.cols() != space.candidate_count()) {
    throw ValidationError("matrix is " + std::to_string(f.rows()) + "x" + std::to_string(f.cols()) + ", expected " +
                          std::to_string(space.size()) + "x" + std::to_string(space.candidate_count()));
  }
  space.require_within_cap();
  const std::size_t m = space.row_count();
  const std::size_t reference = 0;

  // w(j) = (1 / N_{X,j}) * sum over b with b(X) = j of F(delta_b)(X).
  std::vector<Rational> sums(m, 0);
  Ballot b = space.first();
  std::uint64_t i = 0;
  do {
    sums[b.row(reference)] += f.at(i, reference);
    ++i;
  } while (BallotSpace::advance(b));
  std::vector<Rational> weights(m);
  for (std::size_t j = 0; j < m; ++j) weights[j] = sums[j] / Rational(space.placement_count(j));

  b = space.first();
  i = 0;
  do {
    for (std::size_t x = 0; x < space.candidate_count(); ++x) {
      if (f.at(i, x) != weights[b.row(x)]) return NotNeutral{i, x, weights[b.row(x)], f.at(i, x)};
    }
    ++i;
  } while (BallotSpace::advance(b));
  return WeightVector(std::move(weights));
}

}  // namespace tabloid
