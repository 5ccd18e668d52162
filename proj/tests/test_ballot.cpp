#include <doctest.h>

#include "oracle.hpp"
#include "tabloid/ballot.hpp"
#include "tabloid/error.hpp"

using namespace tabloid;

namespace {

SpacePtr space_of(std::vector<std::size_t> parts, std::vector<std::string> names = {}) {
  Composition c(std::move(parts));
  CandidateSet cands = names.empty() ? CandidateSet::standard(c.total()) : CandidateSet(std::move(names));
  return BallotSpace::make(std::move(cands), std::move(c));
}

}  // namespace

TEST_CASE("composition sizes are multinomial coefficients") {
  CHECK(Composition({2, 2}).ballot_count() == 6);
  CHECK(Composition({1, 1, 1}).ballot_count() == 6);
  CHECK(Composition({2, 1, 3}).ballot_count() == 60);
  CHECK(Composition({5}).ballot_count() == 1);
  CHECK(Composition({1, 2}).part_count() == 2);
  CHECK(Composition({1, 2}).total() == 3);
  CHECK_THROWS_AS(Composition({2, 0}), ValidationError);
  CHECK_THROWS_AS(Composition({}), ValidationError);
}

TEST_CASE("multinomial refuses to overflow") {
  std::vector<std::size_t> ones(30, 1);
  CHECK_THROWS_AS(multinomial(ones), ValidationError);
}

TEST_CASE("candidate set validation") {
  CHECK_THROWS_AS(CandidateSet({"A", "A"}), ValidationError);
  CHECK_THROWS_AS(CandidateSet({""}), ValidationError);
  CHECK(CandidateSet::standard(3).names() == std::vector<std::string>{"A", "B", "C"});
  CHECK(CandidateSet::standard(27).name(26) == "C27");
  CHECK_THROWS_AS(CandidateSet::standard(3).index_of("Z"), ValidationError);
  CHECK_THROWS_AS(BallotSpace(CandidateSet::standard(3), Composition({2, 2})), ValidationError);
}

TEST_CASE("(2,2) enumeration matches the b1..b6 listing") {
  const auto space = space_of({2, 2});
  const auto all = space->enumerate();
  const std::vector<std::string> expected = {"A B | C D", "A C | B D", "A D | B C",
                                             "B C | A D", "B D | A C", "C D | A B"};
  REQUIRE(all.size() == expected.size());
  for (std::size_t i = 0; i < all.size(); ++i) CHECK(space->format(all[i]) == expected[i]);
}

TEST_CASE("enumeration agrees with brute force for every composition of n <= 5") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& parts : oracle::compositions(n)) {
      CAPTURE(oracle::name(parts));
      const auto space = space_of(parts);
      const auto all = space->enumerate();
      const auto reference = oracle::ballots(parts);
      REQUIRE(all.size() == reference.size());
      REQUIRE(all.size() == space->size());
      for (std::size_t i = 0; i < all.size(); ++i) {
        CHECK(all[i].rows() == reference[i]);
        CHECK(space->rank(all[i]) == i);
        CHECK(space->unrank(i) == all[i]);
      }
    }
  }
}

TEST_CASE("rank and unrank on a large space without enumeration") {
  const auto space = space_of({3, 4, 5, 2});
  for (std::uint64_t i : {std::uint64_t{0}, space->size() / 3, space->size() - 1}) {
    CHECK(space->rank(space->unrank(i)) == i);
  }
  CHECK_THROWS_AS(space->unrank(space->size()), ValidationError);
}

TEST_CASE("evaluation map is 1-based") {
  const auto space = space_of({2, 1, 3}, {"A", "B", "C", "D", "E", "F"});
  const Ballot b1 = space->from_rows({{"B", "D"}, {"A"}, {"C", "E", "F"}});
  CHECK(space->evaluate(b1, "D") == 1);
  const auto wrong_shape = space_of({2, 3, 1}, {"A", "B", "C", "D", "E", "F"});
  const Ballot b2 = wrong_shape->from_rows({{"A", "B"}, {"E", "F", "C"}, {"D"}});
  CHECK(wrong_shape->evaluate(b2, "D") == 3);
  CHECK_THROWS_AS(space->evaluate(b1, "Z"), ValidationError);
}

TEST_CASE("from_rows validation") {
  const auto space = space_of({2, 2});
  CHECK_THROWS_AS(space->from_rows({{"A", "B", "C"}, {"D"}}), ValidationError);
  CHECK_THROWS_AS(space->from_rows({{"A", "A"}, {"C", "D"}}), ValidationError);
  CHECK_THROWS_AS(space->from_rows({{"A", "B"}, {"C", "Q"}}), ValidationError);
  CHECK_THROWS_AS(space->from_rows({{"A", "B"}}), ValidationError);
  CHECK(space->from_rows({{"B", "A"}, {"D", "C"}}) == space->from_rows({{"A", "B"}, {"C", "D"}}));
  CHECK(space->to_rows(space->unrank(3)) == std::vector<std::vector<std::string>>{{"B", "C"}, {"A", "D"}});
}

TEST_CASE("enumeration respects the size cap") {
  const auto space = BallotSpace::make(CandidateSet::standard(6), Composition({1, 1, 1, 1, 1, 1}), 100);
  CHECK(space->size() == 720);
  CHECK_THROWS_AS(space->enumerate(), CapExceeded);
  CHECK(space->rank(space->unrank(500)) == 500);
}

TEST_CASE("placement counts") {
  const auto space = space_of({1, 2, 2});
  const auto all = oracle::ballots({1, 2, 2});
  for (std::size_t i = 0; i < 3; ++i) {
    std::uint64_t direct = 0;
    for (const auto& b : all) direct += b[0] == i;
    CHECK(space->placement_count(i) == direct);
    for (std::size_t j = 0; j < 3; ++j) {
      std::uint64_t pair = 0;
      for (const auto& b : all) pair += b[0] == i && b[1] == j;
      CHECK(space->pair_placement_count(i, j) == pair);
    }
  }
}

TEST_CASE("permutations") {
  const auto cands = CandidateSet::standard(4);
  const Permutation tau = parse_cycles(cands, "(A B C)");
  CHECK(tau(0) == 1);
  CHECK(tau(2) == 0);
  CHECK(format_cycles(cands, tau) == "(A B C)");
  CHECK(compose(tau, tau.inverse()).is_identity());
  CHECK(format_cycles(cands, Permutation::identity(4)) == "()");
  CHECK_THROWS_AS(Permutation({0, 0, 1}), ValidationError);
  CHECK_THROWS_AS(parse_cycles(cands, "(A A)"), ValidationError);
}

TEST_CASE("permuting ballots composes as a right action") {
  const auto space = space_of({1, 2, 1});
  const auto cands = space->candidates();
  const Permutation s = parse_cycles(cands, "(A B)");
  const Permutation t = parse_cycles(cands, "(B C D)");
  for (const auto& b : space->enumerate()) {
    CHECK(space->permute(s, space->permute(t, b)) == space->permute(compose(t, s), b));
    for (std::size_t x = 0; x < 4; ++x) CHECK(space->permute(t, b).row(x) == b.row(t(x)));
  }
}
