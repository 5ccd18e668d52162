#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tabloid/ballot.hpp"
#include "tabloid/rational.hpp"

namespace tabloid {

inline constexpr double boundary_epsilon = 1e-9;

// Sparse exact profile: sorted (ballot index, coefficient) pairs, no zeros.
class Profile {
 public:
  struct Term {
    std::uint64_t index;
    Rational coefficient;
    bool operator==(const Term&) const = default;
  };

  explicit Profile(SpacePtr space);
  // Repeated indices accumulate; zero sums are dropped.
  Profile(SpacePtr space, std::vector<Term> terms);

  static Profile delta(SpacePtr space, std::uint64_t index, const Rational& coefficient = 1);
  static Profile delta(SpacePtr space, const Ballot& ballot, const Rational& coefficient = 1);

  const BallotSpace& space() const noexcept { return *space_; }
  const SpacePtr& space_ptr() const noexcept { return space_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t support_size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  Rational coefficient(std::uint64_t index) const;

  Profile operator-() const;
  Profile& operator+=(const Profile& other);
  Profile& operator-=(const Profile& other);
  Profile& operator*=(const Rational& scale);
  friend Profile operator+(Profile a, const Profile& b) { return a += b; }
  friend Profile operator-(Profile a, const Profile& b) { return a -= b; }
  friend Profile operator*(const Rational& s, Profile p) { return p *= s; }

  bool operator==(const Profile& other) const;
  // Orders profiles of one space by their term lists; used for orbit sets.
  bool operator<(const Profile& other) const;

  void require_same_space(const Profile& other) const;

 private:
  SpacePtr space_;
  std::vector<Term> terms_;
};

// Dense float64 profile, used only where irrational maps (rotations) appear.
class FloatProfile {
 public:
  explicit FloatProfile(SpacePtr space);
  FloatProfile(SpacePtr space, std::vector<double> values);
  static FloatProfile from(const Profile& p);

  const BallotSpace& space() const noexcept { return *space_; }
  const SpacePtr& space_ptr() const noexcept { return space_; }
  std::span<const double> values() const noexcept { return values_; }
  std::vector<double>& mutable_values() noexcept { return values_; }
  double operator[](std::uint64_t i) const { return values_[i]; }

  FloatProfile& operator+=(const FloatProfile& other);
  FloatProfile& operator-=(const FloatProfile& other);
  FloatProfile& operator*=(double scale);
  friend FloatProfile operator+(FloatProfile a, const FloatProfile& b) { return a += b; }
  friend FloatProfile operator-(FloatProfile a, const FloatProfile& b) { return a -= b; }
  friend FloatProfile operator*(double s, FloatProfile p) { return p *= s; }

  double norm() const;
  void require_same_space(const FloatProfile& other) const;

 private:
  SpacePtr space_;
  std::vector<double> values_;
};

bool same_space(const BallotSpace& a, const BallotSpace& b);

Rational inner_product(const Profile& p, const Profile& q);
double inner_product(const FloatProfile& p, const FloatProfile& q);

// Sum of absolute coefficients.
Rational height(const Profile& p);

Profile unit_profile(SpacePtr space);

// a_{X>Y}: indicator of ballots placing X strictly above Y.
Profile a_vector(SpacePtr space, std::size_t x, std::size_t y);
// r_{X>Y} = a_{X>Y} - a_{Y>X}.
Profile r_vector(SpacePtr space, std::size_t x, std::size_t y);

// Inner products of p with a_{X>Y} and a_{Y>X}, from p's support only.
struct PairCounts {
  Rational above;  // p . a_{X>Y}
  Rational below;  // p . a_{Y>X}
  Rational margin() const { return above - below; }  // p . r_{X>Y}
};
PairCounts pair_counts(const Profile& p, std::size_t x, std::size_t y);

enum class Region { XAboveY, XBelowY, Tied };
Profile project(const Profile& p, Region region, std::size_t x, std::size_t y);

enum class HalfSpace { Positive, Boundary, Negative };
HalfSpace half_space_position(const Profile& p, const Profile& v);
HalfSpace half_space_position(const FloatProfile& p, const FloatProfile& v, double eps = boundary_epsilon);
const char* to_string(HalfSpace h);

bool is_nonnegative(const Profile& p);
bool unanimous_preference(const Profile& p, std::size_t x, std::size_t y);

}  // namespace tabloid
