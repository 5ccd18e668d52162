#include <doctest.h>

#include "oracle.hpp"
#include "tabloid/error.hpp"
#include "tabloid/positional.hpp"

using namespace tabloid;

namespace {

SpacePtr abc() { return BallotSpace::make(CandidateSet::standard(3), Composition({1, 1, 1})); }

WeightVector weights(std::initializer_list<int> xs) {
  std::vector<Rational> w;
  for (int x : xs) w.emplace_back(x);
  return WeightVector(std::move(w));
}

// The listing order ABC, ACB, CAB, BAC, BCA, CBA written out as rows.
std::vector<Ballot> listed(const BallotSpace& space) {
  return {space.from_rows({{"A"}, {"B"}, {"C"}}), space.from_rows({{"A"}, {"C"}, {"B"}}),
          space.from_rows({{"C"}, {"A"}, {"B"}}), space.from_rows({{"B"}, {"A"}, {"C"}}),
          space.from_rows({{"B"}, {"C"}, {"A"}}), space.from_rows({{"C"}, {"B"}, {"A"}})};
}

std::vector<Rational> in_listing(const Profile& p, const std::vector<Ballot>& order) {
  std::vector<Rational> out;
  for (const auto& b : order) out.push_back(p.coefficient(p.space().rank(b)));
  return out;
}

std::vector<Rational> ints(std::initializer_list<int> xs) {
  std::vector<Rational> out;
  for (int x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("positional vectors of w = (3,2,1) on three candidates") {
  const auto space = abc();
  const auto order = listed(*space);
  const auto w = weights({3, 2, 1});
  CHECK(in_listing(positional_vector(space, w, 0), order) == ints({3, 3, 2, 2, 1, 1}));
  CHECK(in_listing(positional_vector(space, w, 1), order) == ints({2, 1, 1, 3, 3, 2}));
  CHECK(in_listing(positional_vector(space, w, 2), order) == ints({1, 2, 3, 1, 2, 3}));
  CHECK(in_listing(v_diff(space, w, 0, 1), order) == ints({1, 2, 1, -1, -2, -1}));
}

TEST_CASE("score(A) is the linear form 3r1 + 3r2 + 2r3 + 2r4 + r5 + r6") {
  const auto space = abc();
  const auto order = listed(*space);
  const auto w = weights({3, 2, 1});
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Rational> r;
    std::vector<Profile::Term> terms;
    for (std::size_t i = 0; i < 6; ++i) {
      r.push_back(oracle::random_rational(rng));
      terms.push_back({space->rank(order[i]), r.back()});
    }
    const Profile p(space, terms);
    CHECK(tally(w, p)[0] == 3 * r[0] + 3 * r[1] + 2 * r[2] + 2 * r[3] + r[4] + r[5]);
  }
}

TEST_CASE("tally of 3(A>B>C) + 2(B>C>A)") {
  const auto space = abc();
  const Profile p = 3 * Profile::delta(space, space->from_rows({{"A"}, {"B"}, {"C"}})) +
                    2 * Profile::delta(space, space->from_rows({{"B"}, {"C"}, {"A"}}));
  const Scoreboard s = tally(weights({3, 2, 1}), p);
  CHECK(s.scores == ints({11, 12, 7}));
  CHECK(ranking(s).tiers == std::vector<std::vector<std::size_t>>{{1}, {0}, {2}});
  const HeadToHead h = head_to_head(p, 0, 1);
  CHECK(h.outcome == Contest::FirstWins);
  CHECK(h.counts.above == 3);
  CHECK(h.counts.below == 2);
}

TEST_CASE("empty profile ties everyone") {
  const auto space = abc();
  const Scoreboard s = tally(weights({3, 2, 1}), Profile(space));
  CHECK(s.scores == ints({0, 0, 0}));
  CHECK(ranking(s).tiers == std::vector<std::vector<std::size_t>>{{0, 1, 2}});
  CHECK(head_to_head(Profile(space), 0, 2).outcome == Contest::Tie);
}

TEST_CASE("cardinally related scores rank alike") {
  Scoreboard f{ints({4, 1, 2})};
  Scoreboard g{ints({10, 4, 6})};
  CHECK(ranking(f) == ranking(g));
}

TEST_CASE("weight validation") {
  const auto space = abc();
  CHECK_THROWS_AS(tally(weights({3, 2}), Profile(space)), ValidationError);
  CHECK_THROWS_AS(WeightVector(std::vector<Rational>{}), ValidationError);
  CHECK(weights({2, 2, 2}).is_trivial());
  CHECK_FALSE(weights({2, 2, 1}).is_trivial());
}

TEST_CASE("tally matches the direct point sum") {
  std::mt19937_64 rng(3);
  for (const auto& parts : std::vector<std::vector<std::size_t>>{{1, 1, 1}, {2, 1}, {2, 2}, {1, 2, 1, 1}}) {
    const auto space = BallotSpace::make(CandidateSet::standard(Composition(parts).total()), Composition(parts));
    const auto all = oracle::ballots(parts);
    for (int trial = 0; trial < 10; ++trial) {
      const auto wv = oracle::random_weights(rng, parts.size());
      const WeightVector w(wv);
      const Profile p = oracle::random_profile(rng, space, 8);
      const auto dense = oracle::dense(p);
      const Scoreboard s = tally(w, p);
      for (std::size_t x = 0; x < space->candidate_count(); ++x) {
        CHECK(s[x] == oracle::dot(dense, oracle::score_vector(all, wv, x)));
      }
      // A tally ranks X above Y exactly when p lies in the positive half-space of v_{X>Y}.
      const auto h = half_space_position(p, v_diff(space, w, 0, 1));
      CHECK((s[0] > s[1]) == (h == HalfSpace::Positive));
    }
  }
}

TEST_CASE("reconstruct_weight inverts positional_matrix") {
  std::mt19937_64 rng(5);
  for (const auto& parts : std::vector<std::vector<std::size_t>>{{1, 1, 1}, {2, 1}, {1, 2}, {2, 2}, {1, 1, 2}}) {
    const auto space = BallotSpace::make(CandidateSet::standard(Composition(parts).total()), Composition(parts));
    const WeightVector w(oracle::random_weights(rng, parts.size(), false));
    auto matrix = positional_matrix(space, w);
    const auto back = reconstruct_weight(*space, matrix);
    REQUIRE(std::holds_alternative<WeightVector>(back));
    CHECK(std::get<WeightVector>(back) == w);

    matrix.at(space->size() - 1, 1) += 1;
    const auto broken = reconstruct_weight(*space, matrix);
    REQUIRE(std::holds_alternative<NotNeutral>(broken));
    CHECK(std::get<NotNeutral>(broken).actual != std::get<NotNeutral>(broken).expected);
  }
}
