#include <doctest.h>

#include "oracle.hpp"
#include "tabloid/equivalence.hpp"
#include "tabloid/error.hpp"

using namespace tabloid;

namespace {

WeightVector weights(std::initializer_list<int> xs) {
  std::vector<Rational> w;
  for (int x : xs) w.emplace_back(x);
  return WeightVector(std::move(w));
}

WeightVector negate(const WeightVector& w) {
  std::vector<Rational> out;
  for (const auto& x : w.values()) out.push_back(-x);
  return WeightVector(std::move(out));
}

std::vector<Rational> rats(std::initializer_list<Rational> xs) { return xs; }

}  // namespace

TEST_CASE("kernel lemma") {
  const auto space = BallotSpace::make(CandidateSet::standard(3), Composition({1, 1, 1}));
  CHECK(kernel_check(space, weights({4, 4, 4}), 0, 1));
  CHECK_FALSE(kernel_check(space, weights({3, 2, 1}), 0, 1));
  CHECK_FALSE(kernel_check(space, weights({1, 1, 0}), 1, 2));
  CHECK_THROWS_AS(kernel_check(space, weights({3, 2, 1}), 2, 2), ValidationError);
}

TEST_CASE("order equivalence certificates") {
  const auto a = order_certificate(weights({3, 2, 1}), weights({2, 1, 0}));
  REQUIRE(a);
  CHECK(a->alpha == 1);
  CHECK(a->beta == -1);
  const auto b = order_certificate(weights({4, 1, 2}), weights({10, 4, 6}));
  REQUIRE(b);
  CHECK(b->alpha == 2);
  CHECK(b->beta == 2);
  CHECK_FALSE(order_equivalent(weights({3, 2, 1}), weights({-3, -2, -1})));
  CHECK(order_equivalent(weights({1, 1}), weights({5, 5})));
  CHECK_FALSE(order_equivalent(weights({1, 1}), weights({5, 4})));
  CHECK_THROWS_AS(order_equivalent(weights({1, 2}), weights({1, 2, 3})), ValidationError);
}

TEST_CASE("cardinal equivalence") {
  const auto c = cardinal_certificate(weights({4, 1, 2}), weights({8, 2, 4}));
  REQUIRE(c);
  CHECK(c->alpha == 2);
  CHECK(c->shift == 0);
  CHECK(cardinal_equivalent(weights({3, 2, 1}), weights({3, 2, 1})));
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    const WeightVector u(oracle::random_weights(rng, 3, false));
    std::vector<Rational> w;
    const Rational alpha = oracle::random_rational(rng);
    const Rational beta = oracle::random_rational(rng);
    for (const auto& x : u.values()) w.push_back(alpha * x + beta);
    const WeightVector wv(w);
    const bool expected = u.is_trivial() ? wv.is_trivial() : alpha > 0;
    CHECK(cardinal_equivalent(u, wv) == expected);
    CHECK(order_equivalent(u, wv) == expected);
  }
}

TEST_CASE("order equivalence is an equivalence relation") {
  std::mt19937_64 rng(43);
  std::vector<WeightVector> pool;
  for (int i = 0; i < 12; ++i) {
    const WeightVector base(oracle::random_weights(rng, 3));
    pool.push_back(base);
    std::vector<Rational> shifted;
    for (const auto& x : base.values()) shifted.push_back(Rational(i + 1, 2) * x - i);
    pool.emplace_back(shifted);
  }
  for (const auto& a : pool) {
    CHECK(order_equivalent(a, a));
    for (const auto& b : pool) {
      CHECK(order_equivalent(a, b) == order_equivalent(b, a));
      for (const auto& c : pool) {
        if (order_equivalent(a, b) && order_equivalent(b, c)) CHECK(order_equivalent(a, c));
      }
    }
  }
}

TEST_CASE("canonical representatives") {
  const auto c = canonicalize(weights({3, 2, 1}));
  CHECK(c.representative == rats({1, 0, -1}));
  CHECK_FALSE(c.trivial);
  CHECK(canonicalize(WeightVector(c.representative)).representative == c.representative);
  const auto t = canonicalize(weights({6, 6, 6, 6}));
  CHECK(t.trivial);
  CHECK(t.representative == rats({0, 0, 0, 0}));
  CHECK(sum(canonicalize(weights({7, 0, 2, 9})).representative) == 0);
}

TEST_CASE("projective coordinates") {
  const auto basis = orthogonal_basis(4);
  REQUIRE(basis.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(sum(basis[i]) == 0);
    for (std::size_t j = i + 1; j < 3; ++j) {
      Rational d = 0;
      for (std::size_t t = 0; t < 4; ++t) d += basis[i][t] * basis[j][t];
      CHECK(d == 0);
    }
  }
  CHECK(projective_coords(weights({3, 2, 1})) == projective_coords(weights({-3, -2, -1})));
  CHECK(projective_coords(weights({3, 2, 1})) != projective_coords(weights({1, 0, 0})));
  CHECK(projective_coords(weights({2, 7})) == projective_coords(weights({9, -1})));
  CHECK(projective_coords(weights({2, 7}))->coords == rats({1}));
  CHECK_FALSE(projective_coords(weights({4, 4, 4})));
  CHECK_THROWS_AS(projective_coords(weights({4})), ValidationError);

  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 200; ++trial) {
    const WeightVector u(oracle::random_weights(rng, 3));
    const WeightVector w = trial % 3 == 0 ? WeightVector(u) : WeightVector(oracle::random_weights(rng, 3));
    const WeightVector v = trial % 2 == 0 ? negate(w) : w;
    const bool same = projective_coords(u) == projective_coords(v);
    CHECK(same == (order_equivalent(u, v) || order_equivalent(u, negate(v))));
  }
}

TEST_CASE("equivalent weights rank every profile alike; inequivalent ones are separated") {
  std::mt19937_64 rng(53);
  for (const auto& parts : std::vector<std::vector<std::size_t>>{{1, 1, 1}, {2, 1}, {2, 2}}) {
    const auto space = BallotSpace::make(CandidateSet::standard(Composition(parts).total()), Composition(parts));
    for (int trial = 0; trial < 5; ++trial) {
      const WeightVector u(oracle::random_weights(rng, parts.size()));
      std::vector<Rational> shifted;
      for (const auto& x : u.values()) shifted.push_back(3 * x + 5);
      const WeightVector w(shifted);
      REQUIRE(order_equivalent(u, w));
      CHECK_FALSE(separating_profile(space, u, w));
      for (int i = 0; i < 20; ++i) {
        const Profile p = oracle::random_profile(rng, space, 5);
        CHECK(ranking(tally(u, p)) == ranking(tally(w, p)));
      }
      const WeightVector other = negate(u);
      const auto p = separating_profile(space, u, other);
      REQUIRE(p);
      CHECK(ranking(tally(u, *p)) != ranking(tally(other, *p)));
    }
  }
  const auto abc = BallotSpace::make(CandidateSet::standard(3), Composition({1, 1, 1}));
  const auto p = separating_profile(abc, weights({3, 2, 1}), weights({1, 0, 0}));
  REQUIRE(p);
  CHECK(ranking(tally(weights({3, 2, 1}), *p)) != ranking(tally(weights({1, 0, 0}), *p)));
}
