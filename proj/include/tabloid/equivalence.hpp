#pragma once

#include <optional>
#include <vector>

#include "tabloid/positional.hpp"

namespace tabloid {

// True iff v_{X>Y} = 0, which happens exactly for w on the line through 1.
bool kernel_check(const SpacePtr& space, const WeightVector& w, std::size_t x, std::size_t y);

// w = alpha u + beta 1 with alpha > 0 (second argument in terms of the first).
struct OrderCertificate {
  Rational alpha;
  Rational beta;
};

// w = alpha (u + shift 1) with alpha > 0.
struct CardinalCertificate {
  Rational alpha;
  Rational shift;
};

std::optional<OrderCertificate> order_certificate(const WeightVector& u, const WeightVector& w);
std::optional<CardinalCertificate> cardinal_certificate(const WeightVector& u, const WeightVector& w);

bool order_equivalent(const WeightVector& u, const WeightVector& w);
// Solved through the cardinal certificate, then checked against order_equivalent.
bool cardinal_equivalent(const WeightVector& u, const WeightVector& w);

struct CanonicalWeight {
  std::vector<Rational> representative;  // w - mean(w) 1
  Rational scale;                        // |first nonzero entry of representative|, 0 if trivial
  std::vector<Rational> normalized;      // representative / scale
  bool trivial = false;
};

CanonicalWeight canonicalize(const WeightVector& w);

// Homogeneous coordinates (length m - 1) in the orthogonalized basis
// e_i - e_{i+1} of 1-perp, first nonzero coordinate +1.
struct ProjectivePoint {
  std::vector<Rational> coords;
  bool operator==(const ProjectivePoint&) const = default;
};

// Nothing for trivial weights.
std::optional<ProjectivePoint> projective_coords(const WeightVector& w);

// Orthogonal basis of 1-perp used by projective_coords.
const std::vector<std::vector<Rational>>& orthogonal_basis(std::size_t m);

// A profile on which u ranks C1 strictly above C2 while w ties them or ranks
// them the other way. Nothing when u and w are order-equivalent or one is trivial.
std::optional<Profile> separating_profile(const SpacePtr& space, const WeightVector& u, const WeightVector& w);

}  // namespace tabloid
