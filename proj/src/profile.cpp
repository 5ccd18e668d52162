#include "tabloid/profile.hpp"

#include <algorithm>
#include <cmath>

#include "tabloid/error.hpp"
#include "tabloid/kernels.hpp"

namespace tabloid {

bool same_space(const BallotSpace& a, const BallotSpace& b) { return &a == &b || a == b; }

Profile::Profile(SpacePtr space) : space_(std::move(space)) {
  if (!space_) throw ValidationError("profile requires a ballot space");
}

Profile::Profile(SpacePtr space, std::vector<Term> terms) : Profile(std::move(space)) {
  for (const auto& t : terms) {
    if (t.index >= space_->size()) {
      throw ValidationError("ballot index " + std::to_string(t.index) + " out of range");
    }
  }
  std::stable_sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.index < b.index; });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().index == t.index) {
      terms_.back().coefficient += t.coefficient;
    } else {
      terms_.push_back(std::move(t));
    }
  }
  std::erase_if(terms_, [](const Term& t) { return t.coefficient == 0; });
}

Profile Profile::delta(SpacePtr space, std::uint64_t index, const Rational& coefficient) {
  return Profile(std::move(space), {Term{index, coefficient}});
}

Profile Profile::delta(SpacePtr space, const Ballot& ballot, const Rational& coefficient) {
  const auto index = space->rank(ballot);
  return delta(std::move(space), index, coefficient);
}

Rational Profile::coefficient(std::uint64_t index) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), index,
                             [](const Term& t, std::uint64_t i) { return t.index < i; });
  if (it != terms_.end() && it->index == index) return it->coefficient;
  return 0;
}

void Profile::require_same_space(const Profile& other) const {
  if (!same_space(*space_, *other.space_)) throw ValidationError("profiles belong to different ballot spaces");
}

Profile Profile::operator-() const {
  Profile out = *this;
  for (auto& t : out.terms_) t.coefficient = -t.coefficient;
  return out;
}

Profile& Profile::operator+=(const Profile& other) {
  require_same_space(other);
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->index < b->index)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->index < a->index) {
      merged.push_back(*b++);
    } else {
      Rational c = a->coefficient + b->coefficient;
      if (c != 0) merged.push_back(Term{a->index, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

Profile& Profile::operator-=(const Profile& other) { return *this += -other; }

Profile& Profile::operator*=(const Rational& scale) {
  if (scale == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coefficient *= scale;
  }
  return *this;
}

bool Profile::operator==(const Profile& other) const {
  return same_space(*space_, *other.space_) && terms_ == other.terms_;
}

bool Profile::operator<(const Profile& other) const {
  return std::lexicographical_compare(terms_.begin(), terms_.end(), other.terms_.begin(), other.terms_.end(),
                                      [](const Term& a, const Term& b) {
                                        if (a.index != b.index) return a.index < b.index;
                                        return a.coefficient < b.coefficient;
                                      });
}

FloatProfile::FloatProfile(SpacePtr space) : space_(std::move(space)) {
  if (!space_) throw ValidationError("profile requires a ballot space");
  space_->require_within_cap();
  values_.assign(space_->size(), 0.0);
}

FloatProfile::FloatProfile(SpacePtr space, std::vector<double> values)
    : space_(std::move(space)), values_(std::move(values)) {
  if (!space_) throw ValidationError("profile requires a ballot space");
  if (values_.size() != space_->size()) throw ValidationError("dense profile length does not match ballot count");
}

FloatProfile FloatProfile::from(const Profile& p) {
  FloatProfile out(p.space_ptr());
  for (const auto& t : p.terms()) out.values_[t.index] = to_double(t.coefficient);
  return out;
}

void FloatProfile::require_same_space(const FloatProfile& other) const {
  if (!same_space(*space_, *other.space_)) throw ValidationError("profiles belong to different ballot spaces");
}

FloatProfile& FloatProfile::operator+=(const FloatProfile& other) {
  require_same_space(other);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
  return *this;
}

FloatProfile& FloatProfile::operator-=(const FloatProfile& other) {
  require_same_space(other);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
  return *this;
}

FloatProfile& FloatProfile::operator*=(double scale) {
  for (auto& v : values_) v *= scale;
  return *this;
}

double FloatProfile::norm() const { return std::sqrt(inner_product(*this, *this)); }

Rational inner_product(const Profile& p, const Profile& q) {
  p.require_same_space(q);
  Rational total = 0;
  auto a = p.terms().begin();
  auto b = q.terms().begin();
  while (a != p.terms().end() && b != q.terms().end()) {
    if (a->index < b->index) {
      ++a;
    } else if (b->index < a->index) {
      ++b;
    } else {
      total += a->coefficient * b->coefficient;
      ++a;
      ++b;
    }
  }
  return total;
}

double inner_product(const FloatProfile& p, const FloatProfile& q) {
  p.require_same_space(q);
  double total = 0.0;
  for (std::size_t i = 0; i < p.values().size(); ++i) total += p[i] * q[i];
  return total;
}

Rational height(const Profile& p) {
  Rational total = 0;
  for (const auto& t : p.terms()) total += abs(t.coefficient);
  return total;
}

Profile unit_profile(SpacePtr space) {
  return kernels::materialize(space, [](const Ballot&) { return Rational(1); });
}

Profile a_vector(SpacePtr space, std::size_t x, std::size_t y) {
  space->require_distinct_pair(x, y);
  return kernels::materialize(space, [x, y](const Ballot& b) { return Rational(b.row(x) < b.row(y) ? 1 : 0); });
}

Profile r_vector(SpacePtr space, std::size_t x, std::size_t y) {
  space->require_distinct_pair(x, y);
  return kernels::materialize(space, [x, y](const Ballot& b) {
    if (b.row(x) < b.row(y)) return Rational(1);
    if (b.row(x) > b.row(y)) return Rational(-1);
    return Rational(0);
  });
}

PairCounts pair_counts(const Profile& p, std::size_t x, std::size_t y) {
  p.space().require_distinct_pair(x, y);
  return kernels::pair_counts(p, x, y);
}

Profile project(const Profile& p, Region region, std::size_t x, std::size_t y) {
  const auto& space = p.space();
  space.require_distinct_pair(x, y);
  std::vector<Profile::Term> kept;
  for (const auto& t : p.terms()) {
    const Ballot b = space.unrank(t.index);
    const bool keep = region == Region::XAboveY   ? b.row(x) < b.row(y)
                      : region == Region::XBelowY ? b.row(x) > b.row(y)
                                                  : b.row(x) == b.row(y);
    if (keep) kept.push_back(t);
  }
  return Profile(p.space_ptr(), std::move(kept));
}

HalfSpace half_space_position(const Profile& p, const Profile& v) {
  if (v.is_zero()) throw ValidationError("half-space of the zero vector is undefined");
  const int s = sign(inner_product(p, v));
  return s > 0 ? HalfSpace::Positive : s < 0 ? HalfSpace::Negative : HalfSpace::Boundary;
}

HalfSpace half_space_position(const FloatProfile& p, const FloatProfile& v, double eps) {
  if (v.norm() == 0.0) throw ValidationError("half-space of the zero vector is undefined");
  const double d = inner_product(p, v);
  if (std::abs(d) <= eps) return HalfSpace::Boundary;
  return d > 0 ? HalfSpace::Positive : HalfSpace::Negative;
}

const char* to_string(HalfSpace h) {
  switch (h) {
    case HalfSpace::Positive:
      return "positive";
    case HalfSpace::Boundary:
      return "boundary";
    case HalfSpace::Negative:
      return "negative";
  }
  return "?";
}

bool is_nonnegative(const Profile& p) {
  return std::all_of(p.terms().begin(), p.terms().end(), [](const auto& t) { return t.coefficient > 0; });
}

bool unanimous_preference(const Profile& p, std::size_t x, std::size_t y) {
  const auto& space = p.space();
  space.require_distinct_pair(x, y);
  bool ordered_support = false;
  for (const auto& t : p.terms()) {
    const Ballot b = space.unrank(t.index);
    if (b.row(x) < b.row(y)) {
      if (t.coefficient < 0) return false;
      ordered_support = true;
    } else if (b.row(x) > b.row(y)) {
      if (t.coefficient > 0) return false;
      ordered_support = true;
    }
  }
  return ordered_support;
}

}  // namespace tabloid
