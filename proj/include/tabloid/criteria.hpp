#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tabloid/group_actions.hpp"
#include "tabloid/positional.hpp"
#include "tabloid/profile.hpp"

namespace tabloid {

// Evidence attached to a failing verdict. Every profile here can be re-checked
// with tally, head_to_head and xy_equivalent.
struct Witness {
  std::size_t first = 0;   // X
  std::size_t second = 0;  // Y
  std::vector<std::pair<std::string, Profile>> profiles;
  std::vector<std::pair<std::string, Scoreboard>> scores;
};

struct CriterionVerdict {
  std::string criterion;
  bool holds = true;
  // False when holds only means "no counterexample within the search budget".
  bool conclusive = true;
  std::optional<Witness> witness;
  std::vector<std::string> notes;

  std::string status() const;
};

// p ~_{X,Y} q: (p - q) is orthogonal to a_{X>Y} and a_{Y>X}.
bool xy_equivalent(const Profile& p, const Profile& q, std::size_t x, std::size_t y);
bool xy_equivalent(const FloatProfile& p, const FloatProfile& q, std::size_t x, std::size_t y,
                   double eps = boundary_epsilon);

// The multiple of the unit profile that moves T(p) back into p's X,Y class.
// T must be a rotation about r_{X>Y} (either orientation).
FloatProfile rotation_correction(const FloatProfile& p, const AxisRotation& rotation, std::size_t x, std::size_t y);

struct IIACounterexample {
  Profile p;
  Profile q;
  // Component of v_{X>Y} orthogonal to span{a_{X>Y}, a_{Y>X}}, scaled to integers.
  Profile direction;
};

// Nonnegative integer profiles p ~ q with p . v_{X>Y} > 0 > q . v_{X>Y}, or
// nothing when v_{X>Y} lies in span{a_{X>Y}, a_{Y>X}}.
std::optional<IIACounterexample> iia_counterexample(const SpacePtr& space, const WeightVector& w, std::size_t x,
                                                    std::size_t y);
CriterionVerdict iia_check(const SpacePtr& space, const WeightVector& w);

CriterionVerdict pareto_check(const SpacePtr& space, const WeightVector& w);

// Nonnegative integer profile where X wins head-to-head against Y but does not
// outscore Y, or nothing if the method satisfies strong majority.
std::optional<Profile> strong_majority_witness(const SpacePtr& space, const WeightVector& w, std::size_t x,
                                               std::size_t y);
CriterionVerdict strong_majority_check(const SpacePtr& space, const WeightVector& w);

// sum over i < j of |C(i, j)| (w(i) - w(j)), with C(i, j) the ballots placing X in row i and Y in row j.
Rational u_closed_form(const BallotSpace& space, const WeightVector& w);
// tally(w, r_{X>Y}); throws std::logic_error if the result departs from
// (u, -u, 0, ...) with u equal to the closed form.
Scoreboard u_vector(const SpacePtr& space, const WeightVector& w, std::size_t x, std::size_t y);

// The candidate beating every rival head-to-head.
std::optional<std::size_t> condorcet_candidate(const Profile& p);
// Same question answered through the orbit of p under the isotropy subgroup of each candidate.
std::optional<std::size_t> condorcet_candidate_by_orbit(const Profile& p);

inline constexpr std::uint64_t default_search_budget = 100'000;
inline constexpr std::uint64_t default_seed = 42;

enum class Execution { Serial, Parallel };

struct CondorcetCounterexample {
  Profile profile;
  std::size_t condorcet;
  std::uint64_t search_index;  // position in the deterministic search order
};

// Searches integer profiles with coefficients in [0, 5]: exhaustive over a
// prefix of the ballots first, then seeded random sparse profiles. Returns
// the counterexample with the smallest search index.
std::optional<CondorcetCounterexample> find_condorcet_counterexample(const SpacePtr& space, const WeightVector& w,
                                                                     std::uint64_t budget, std::uint64_t seed,
                                                                     Execution execution = Execution::Parallel);
// Profile generated at a given search index (exposed for re-verification).
Profile condorcet_search_profile(const SpacePtr& space, std::uint64_t budget, std::uint64_t seed,
                                 std::uint64_t index);

CriterionVerdict condorcet_check(const SpacePtr& space, const WeightVector& w,
                                 std::uint64_t budget = default_search_budget, std::uint64_t seed = default_seed);

// True when the candidate is the only member of the top tier of the tally.
bool unique_winner(const Scoreboard& scores, std::size_t candidate);

}  // namespace tabloid
