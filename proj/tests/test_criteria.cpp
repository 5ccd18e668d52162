#include <doctest.h>

#include <set>
#include <numbers>

#include "oracle.hpp"
#include "tabloid/criteria.hpp"
#include "tabloid/error.hpp"

using namespace tabloid;

namespace {

SpacePtr space_of(std::vector<std::size_t> parts) {
  Composition c(std::move(parts));
  return BallotSpace::make(CandidateSet::standard(c.total()), std::move(c));
}

WeightVector weights(std::initializer_list<int> xs) {
  std::vector<Rational> w;
  for (int x : xs) w.emplace_back(x);
  return WeightVector(std::move(w));
}

Profile three_two(const SpacePtr& space) {
  return 3 * Profile::delta(space, space->from_rows({{"A"}, {"B"}, {"C"}})) +
         2 * Profile::delta(space, space->from_rows({{"B"}, {"C"}, {"A"}}));
}

}  // namespace

TEST_CASE("the two displayed X,Y-equivalent profiles") {
  const auto space =
      BallotSpace::make(CandidateSet({"X", "Y", "A", "B", "C", "D"}), Composition({1, 2, 3}));
  // The second tabloid of the first profile lists C twice; B is the candidate missing from it.
  const Profile p = Profile::delta(space, space->from_rows({{"X"}, {"A", "B"}, {"Y", "C", "D"}})) +
                    4 * Profile::delta(space, space->from_rows({{"A"}, {"B", "X"}, {"Y", "C", "D"}})) +
                    3 * Profile::delta(space, space->from_rows({{"A"}, {"X", "Y"}, {"B", "C", "D"}})) +
                    7 * Profile::delta(space, space->from_rows({{"A"}, {"Y", "B"}, {"X", "C", "D"}}));
  const Profile q = 5 * Profile::delta(space, space->from_rows({{"A"}, {"X", "B"}, {"Y", "C", "D"}})) +
                    15 * Profile::delta(space, space->from_rows({{"A"}, {"B", "C"}, {"X", "Y", "D"}})) +
                    7 * Profile::delta(space, space->from_rows({{"Y"}, {"A", "C"}, {"B", "D", "X"}}));
  CHECK(pair_counts(p, 0, 1).above == 5);
  CHECK(pair_counts(p, 0, 1).below == 7);
  CHECK(xy_equivalent(p, q, 0, 1));
  CHECK(xy_equivalent(p, p, 0, 1));
  CHECK_FALSE(xy_equivalent(p, p + unit_profile(space), 0, 1));
  CHECK_FALSE(xy_equivalent(p, q, 0, 2));
  CHECK_THROWS_AS(xy_equivalent(p, q, 1, 1), ValidationError);
}

TEST_CASE("rotation correction restores X,Y-equivalence") {
  const auto space = space_of({1, 2, 1});
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  std::normal_distribution<double> g;
  const Profile r = r_vector(space, 0, 1);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> values(space->size());
    for (auto& v : values) v = g(rng);
    const FloatProfile p(space, values);
    const AxisRotation T = make_rotation(r, angle(rng));
    const FloatProfile q = rotation_correction(p, T, 0, 1);
    CHECK(xy_equivalent(apply_rotation(T, p) + q, p, 0, 1, 1e-8));
    for (double c : q.values()) CHECK(c == doctest::Approx(q[0]));
  }
  const FloatProfile p = FloatProfile::from(unit_profile(space));
  CHECK(rotation_correction(p, make_rotation(r, 0.0), 0, 1).norm() == 0.0);
  CHECK_THROWS_AS(rotation_correction(p, make_rotation(r_vector(space, 0, 2), 0.3), 0, 1), ValidationError);
}

TEST_CASE("IIA") {
  const auto abc = space_of({1, 1, 1});
  const auto w = weights({3, 2, 1});
  const auto ce = iia_counterexample(abc, w, 0, 1);
  REQUIRE(ce);
  CHECK(xy_equivalent(ce->p, ce->q, 0, 1));
  CHECK(is_nonnegative(ce->p));
  CHECK(is_nonnegative(ce->q));
  CHECK(tally(w, ce->p)[0] > tally(w, ce->p)[1]);
  CHECK(tally(w, ce->q)[0] < tally(w, ce->q)[1]);

  const auto verdict = iia_check(abc, w);
  CHECK_FALSE(verdict.holds);
  REQUIRE(verdict.witness);
  CHECK(verdict.witness->profiles.size() == 2);

  CHECK(iia_check(space_of({1, 2}), weights({2, 1})).holds);
  CHECK(iia_check(space_of({2, 2}), weights({5, -1})).holds);
  CHECK_FALSE(iia_counterexample(space_of({3, 1}), weights({0, 4}), 1, 3));
  const auto trivial = iia_check(abc, weights({2, 2, 2}));
  CHECK(trivial.holds);
  CHECK_FALSE(trivial.notes.empty());
  CHECK_FALSE(iia_counterexample(abc, weights({2, 2, 2}), 0, 1));
}

TEST_CASE("Pareto") {
  const auto abc = space_of({1, 1, 1});
  CHECK(pareto_check(abc, weights({3, 2, 1})).holds);

  const auto flat = pareto_check(abc, weights({1, 1, 0}));
  CHECK_FALSE(flat.holds);
  REQUIRE(flat.witness);
  const Profile& p = flat.witness->profiles.front().second;
  CHECK(unanimous_preference(p, 0, 1));
  CHECK(tally(weights({1, 1, 0}), p)[0] == tally(weights({1, 1, 0}), p)[1]);

  const auto reversed = pareto_check(abc, weights({2, 3, 1}));
  CHECK_FALSE(reversed.holds);
  const Profile& s = reversed.witness->profiles.front().second;
  CHECK(inner_product(s, v_diff(abc, weights({2, 3, 1}), 0, 1)) == -1);
}

TEST_CASE("strong majority") {
  CHECK(strong_majority_check(space_of({1, 1}), weights({1, 0})).holds);
  CHECK(strong_majority_check(space_of({2, 3}), weights({4, 1})).holds);
  CHECK_FALSE(strong_majority_check(space_of({2, 3}), weights({1, 4})).holds);
  CHECK(strong_majority_check(space_of({3}), weights({7})).holds);

  const auto abc = space_of({1, 1, 1});
  const auto verdict = strong_majority_check(abc, weights({3, 2, 1}));
  CHECK_FALSE(verdict.holds);
  REQUIRE(verdict.witness);
  CHECK(verdict.witness->profiles.front().second == three_two(abc));

  const auto trivial = strong_majority_check(abc, weights({1, 1, 1}));
  CHECK_FALSE(trivial.holds);
  CHECK_FALSE(trivial.notes.empty());
}

TEST_CASE("strong majority witnesses beyond the small search") {
  // Gaps 1 and 100 need coefficients past the small search range.
  const auto space = space_of({1, 1, 1});
  const WeightVector w({Rational(101), Rational(100), Rational(0)});
  const auto p = strong_majority_witness(space, w, 0, 1);
  REQUIRE(p);
  CHECK(is_nonnegative(*p));
  CHECK(head_to_head(*p, 0, 1).outcome == Contest::FirstWins);
  CHECK(tally(w, *p)[0] <= tally(w, *p)[1]);
}

TEST_CASE("u vector") {
  const auto abc = space_of({1, 1, 1});
  const Scoreboard u = u_vector(abc, weights({3, 2, 1}), 0, 1);
  CHECK(u[0] == 4);
  CHECK(u[1] == -4);
  CHECK(u[2] == 0);
  const Scoreboard zero = u_vector(abc, weights({5, 5, 5}), 1, 2);
  for (std::size_t x = 0; x < 3; ++x) CHECK(zero[x] == 0);
  CHECK(u_vector(space_of({2, 1, 2}), weights({3, 1, 0}), 4, 2)[4] > 0);
}

TEST_CASE("Condorcet candidate by counting and by orbit") {
  const auto abc = space_of({1, 1, 1});
  CHECK(condorcet_candidate(three_two(abc)) == 0u);
  CHECK(condorcet_candidate_by_orbit(three_two(abc)) == 0u);
  CHECK_FALSE(condorcet_candidate(unit_profile(abc)));
  CHECK_FALSE(condorcet_candidate_by_orbit(unit_profile(abc)));
  for (const auto& b : abc->enumerate()) {
    const Profile d = Profile::delta(abc, b);
    std::size_t top = 0;
    while (b.row(top) != 0) ++top;
    CHECK(condorcet_candidate(d) == top);
    CHECK(condorcet_candidate_by_orbit(d) == top);
  }
  std::mt19937_64 rng(37);
  const auto space = space_of({1, 2, 1});
  for (int trial = 0; trial < 100; ++trial) {
    const Profile p = oracle::random_profile(rng, space, 5);
    CHECK(condorcet_candidate(p) == condorcet_candidate_by_orbit(p));
  }
}

TEST_CASE("Condorcet check") {
  const auto abc = space_of({1, 1, 1});
  const auto verdict = condorcet_check(abc, weights({3, 2, 1}));
  CHECK_FALSE(verdict.holds);
  REQUIRE(verdict.witness);
  CHECK(verdict.witness->profiles.front().second == three_two(abc));
  CHECK(verdict.witness->first == 0);
  CHECK(verdict.witness->second == 1);

  const auto two = condorcet_check(space_of({1, 1}), weights({1, 0}), 1000);
  CHECK(two.holds);
  CHECK_FALSE(two.conclusive);
  CHECK(two.status() == "no_counterexample_within_budget");

  const auto trivial = condorcet_check(abc, weights({1, 1, 1}));
  CHECK_FALSE(trivial.holds);
  CHECK_FALSE(trivial.notes.empty());
}

TEST_CASE("Condorcet search is deterministic and agrees across executions") {
  const auto space = space_of({1, 1, 1, 1});
  const WeightVector w({Rational(3), Rational(2), Rational(1), Rational(0)});
  const auto serial = find_condorcet_counterexample(space, w, 5000, 42, Execution::Serial);
  const auto parallel = find_condorcet_counterexample(space, w, 5000, 42, Execution::Parallel);
  REQUIRE(serial);
  REQUIRE(parallel);
  CHECK(serial->search_index == parallel->search_index);
  CHECK(serial->profile == parallel->profile);
  CHECK(condorcet_search_profile(space, 5000, 42, serial->search_index) == serial->profile);
  CHECK_FALSE(unique_winner(tally(w, serial->profile), serial->condorcet));

  const auto other_seed = find_condorcet_counterexample(space, w, 5000, 7, Execution::Serial);
  REQUIRE(other_seed);
}

TEST_CASE("Condorcet search covers small spaces exhaustively") {
  // k = 2: all 35 nonzero profiles with coefficients 0..5.
  const auto space = space_of({1, 1});
  const WeightVector w({Rational(1), Rational(0)});
  CHECK_FALSE(find_condorcet_counterexample(space, w, 1000, 42, Execution::Serial));
  std::set<Profile> seen;
  for (std::uint64_t i = 0; i < 35; ++i) seen.insert(condorcet_search_profile(space, 1000, 42, i));
  CHECK(seen.size() == 35);
}
