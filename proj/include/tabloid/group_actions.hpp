#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "tabloid/positional.hpp"
#include "tabloid/profile.hpp"

namespace tabloid {

// (tau . p)(tau . b) = p(b), with tau . b = b o tau.
Profile permute_profile(const Permutation& tau, const Profile& p);

// Action on R^C matching the profile action: (tau . s)(X) = s(tau(X)), so
// tally(w, tau . p) == permute_scores(tau, tally(w, p)).
Scoreboard permute_scores(const Permutation& tau, const Scoreboard& s);

// Dense k x k 0/1 matrix M with M * p == tau . p in the canonical basis.
std::vector<std::vector<int>> permutation_matrix(const BallotSpace& space, const Permutation& tau);

// Adjacent transpositions of the candidates other than X; they generate the
// isotropy subgroup of X.
std::vector<Permutation> isotropy_generators(std::size_t candidate_count, std::size_t x);

// Closure of {p} under the generators, sorted and deduplicated.
// Throws CapExceeded when the orbit grows past max_size.
std::vector<Profile> orbit(const Profile& p, std::span<const Permutation> generators, std::size_t max_size);

// A rotation in the plane span{u, v} inside axis-perp, identity on the
// complement of that plane. Never stored as a k x k matrix.
class AxisRotation {
 public:
  const BallotSpace& space() const noexcept { return axis_.space(); }
  const SpacePtr& space_ptr() const noexcept { return axis_.space_ptr(); }
  const FloatProfile& axis() const noexcept { return axis_; }
  // Empty only for the identity on spaces with k < 3.
  bool has_plane() const noexcept { return u_.has_value(); }
  const FloatProfile& u() const { return *u_; }
  const FloatProfile& v() const { return *v_; }
  double angle() const noexcept { return theta_; }

  // Same axis and plane, angle replaced.
  AxisRotation with_angle(double theta) const;

 private:
  friend AxisRotation make_rotation(const Profile&, double);
  friend AxisRotation make_rotation(const Profile&, const FloatProfile&, const FloatProfile&, double);
  AxisRotation(FloatProfile axis, std::optional<FloatProfile> u, std::optional<FloatProfile> v, double theta)
      : axis_(std::move(axis)), u_(std::move(u)), v_(std::move(v)), theta_(theta) {}

  FloatProfile axis_;
  std::optional<FloatProfile> u_;
  std::optional<FloatProfile> v_;
  double theta_;
};

// Plane chosen by Gram-Schmidt over e_0, e_1, ... against the axis.
AxisRotation make_rotation(const Profile& axis, double theta);
// Plane spanned by u and v after orthonormalizing them against the axis.
AxisRotation make_rotation(const Profile& axis, const FloatProfile& u, const FloatProfile& v, double theta);

FloatProfile apply_rotation(const AxisRotation& rotation, const FloatProfile& p);
FloatProfile apply_rotation(const AxisRotation& rotation, const Profile& p);

}  // namespace tabloid
