#pragma once

// Data-parallel kernels over the ballot space or a profile's support.
// Each OpenMP kernel has a serial reference in kernels::serial with the same
// contract; tests assert they agree exactly.

#include <functional>
#include <span>
#include <vector>

#include "tabloid/profile.hpp"

namespace tabloid::kernels {

using BallotFunction = std::function<Rational(const Ballot&)>;

// Dense profile whose coefficient at ballot b is f(b), for every b in canonical
// order. Requires k within the space's cap.
Profile materialize(const SpacePtr& space, const BallotFunction& f);

// score[X] = sum over p's support of p(b) * weights[b(X)].
std::vector<Rational> tally(const Profile& p, std::span<const Rational> weights);

PairCounts pair_counts(const Profile& p, std::size_t x, std::size_t y);

namespace serial {

Profile materialize(const SpacePtr& space, const BallotFunction& f);
std::vector<Rational> tally(const Profile& p, std::span<const Rational> weights);
PairCounts pair_counts(const Profile& p, std::size_t x, std::size_t y);

}  // namespace serial

}  // namespace tabloid::kernels
