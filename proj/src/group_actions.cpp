#include "tabloid/group_actions.hpp"

#include <cmath>
#include <deque>
#include <numeric>
#include <set>

#include "tabloid/error.hpp"

namespace tabloid {

Profile permute_profile(const Permutation& tau, const Profile& p) {
  const auto& space = p.space();
  std::vector<Profile::Term> terms;
  terms.reserve(p.support_size());
  for (const auto& t : p.terms()) {
    const Ballot moved = space.permute(tau, space.unrank(t.index));
    terms.push_back(Profile::Term{space.rank(moved), t.coefficient});
  }
  return Profile(p.space_ptr(), std::move(terms));
}

Scoreboard permute_scores(const Permutation& tau, const Scoreboard& s) {
  if (tau.size() != s.size()) throw ValidationError("permutation size does not match scoreboard");
  Scoreboard out{std::vector<Rational>(s.size())};
  for (std::size_t x = 0; x < s.size(); ++x) out.scores[x] = s[tau(x)];
  return out;
}

std::vector<std::vector<int>> permutation_matrix(const BallotSpace& space, const Permutation& tau) {
  space.require_within_cap();
  const auto k = static_cast<std::size_t>(space.size());
  std::vector<std::vector<int>> matrix(k, std::vector<int>(k, 0));
  Ballot b = space.first();
  std::size_t column = 0;
  do {
    matrix[space.rank(space.permute(tau, b))][column] = 1;
    ++column;
  } while (BallotSpace::advance(b));
  return matrix;
}

std::vector<Permutation> isotropy_generators(std::size_t candidate_count, std::size_t x) {
  if (x >= candidate_count) throw ValidationError("candidate index out of range");
  std::vector<std::size_t> others;
  for (std::size_t i = 0; i < candidate_count; ++i) {
    if (i != x) others.push_back(i);
  }
  std::vector<Permutation> generators;
  for (std::size_t i = 0; i + 1 < others.size(); ++i) {
    generators.push_back(Permutation::transposition(candidate_count, others[i], others[i + 1]));
  }
  return generators;
}

std::vector<Profile> orbit(const Profile& p, std::span<const Permutation> generators, std::size_t max_size) {
  std::set<Profile> seen{p};
  std::deque<Profile> frontier{p};
  while (!frontier.empty()) {
    Profile current = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : generators) {
      Profile next = permute_profile(g, current);
      if (seen.insert(next).second) {
        if (seen.size() > max_size) throw CapExceeded(seen.size(), max_size);
        frontier.push_back(std::move(next));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

namespace {

constexpr double independence_tolerance = 1e-6;

// Orthogonalizes candidate against the given unit vectors (two passes for
// stability) and normalizes. Returns false if nothing independent remains.
bool orthonormalize_against(std::vector<double>& candidate, const std::vector<const std::vector<double>*>& basis) {
  const double original = std::sqrt(std::inner_product(candidate.begin(), candidate.end(), candidate.begin(), 0.0));
  if (original == 0.0) return false;
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto* q : basis) {
      const double c = std::inner_product(candidate.begin(), candidate.end(), q->begin(), 0.0);
      for (std::size_t i = 0; i < candidate.size(); ++i) candidate[i] -= c * (*q)[i];
    }
  }
  const double norm = std::sqrt(std::inner_product(candidate.begin(), candidate.end(), candidate.begin(), 0.0));
  if (norm <= independence_tolerance * original) return false;
  for (auto& c : candidate) c /= norm;
  return true;
}

std::vector<double> unit_axis(const FloatProfile& axis) {
  const double norm = axis.norm();
  if (norm == 0.0) throw ValidationError("rotation axis must be nonzero");
  std::vector<double> unit(axis.values().begin(), axis.values().end());
  for (auto& c : unit) c /= norm;
  return unit;
}

}  // namespace

AxisRotation AxisRotation::with_angle(double theta) const {
  if (!has_plane() && theta != 0.0) throw ValidationError("no nontrivial rotation exists about an axis when k < 3");
  return AxisRotation(axis_, u_, v_, theta);
}

AxisRotation make_rotation(const Profile& axis, double theta) {
  if (axis.is_zero()) throw ValidationError("rotation axis must be nonzero");
  FloatProfile dense_axis = FloatProfile::from(axis);
  const auto k = static_cast<std::size_t>(axis.space().size());
  if (k < 3) {
    if (theta != 0.0) throw ValidationError("no nontrivial rotation exists about an axis when k < 3");
    return AxisRotation(std::move(dense_axis), std::nullopt, std::nullopt, theta);
  }
  const std::vector<double> r = unit_axis(dense_axis);
  std::vector<std::vector<double>> plane;
  for (std::size_t i = 0; i < k && plane.size() < 2; ++i) {
    std::vector<double> e(k, 0.0);
    e[i] = 1.0;
    std::vector<const std::vector<double>*> basis{&r};
    for (const auto& q : plane) basis.push_back(&q);
    if (orthonormalize_against(e, basis)) plane.push_back(std::move(e));
  }
  const auto& space = axis.space_ptr();
  return AxisRotation(std::move(dense_axis), FloatProfile(space, std::move(plane[0])),
                      FloatProfile(space, std::move(plane[1])), theta);
}

AxisRotation make_rotation(const Profile& axis, const FloatProfile& u, const FloatProfile& v, double theta) {
  if (axis.is_zero()) throw ValidationError("rotation axis must be nonzero");
  FloatProfile dense_axis = FloatProfile::from(axis);
  dense_axis.require_same_space(u);
  dense_axis.require_same_space(v);
  if (axis.space().size() < 3) throw ValidationError("no 2-plane orthogonal to the axis exists when k < 3");
  const std::vector<double> r = unit_axis(dense_axis);
  std::vector<double> first(u.values().begin(), u.values().end());
  std::vector<double> second(v.values().begin(), v.values().end());
  if (!orthonormalize_against(first, {&r}) || !orthonormalize_against(second, {&r, &first})) {
    throw ValidationError("rotation plane vectors are not independent of the axis");
  }
  const auto& space = axis.space_ptr();
  return AxisRotation(std::move(dense_axis), FloatProfile(space, std::move(first)), FloatProfile(space, std::move(second)),
                      theta);
}

FloatProfile apply_rotation(const AxisRotation& rotation, const FloatProfile& p) {
  rotation.axis().require_same_space(p);
  if (!rotation.has_plane()) return p;
  // T(p) = p + (cos t - 1)[(p.u)u + (p.v)v] + sin t [(p.u)v - (p.v)u]
  const double pu = inner_product(p, rotation.u());
  const double pv = inner_product(p, rotation.v());
  const double c = std::cos(rotation.angle()) - 1.0;
  const double s = std::sin(rotation.angle());
  const double along_u = c * pu - s * pv;
  const double along_v = c * pv + s * pu;
  FloatProfile out = p;
  auto& values = out.mutable_values();
  const auto u = rotation.u().values();
  const auto v = rotation.v().values();
  for (std::size_t i = 0; i < values.size(); ++i) values[i] += along_u * u[i] + along_v * v[i];
  return out;
}

FloatProfile apply_rotation(const AxisRotation& rotation, const Profile& p) {
  return apply_rotation(rotation, FloatProfile::from(p));
}

}  // namespace tabloid
