#include "tabloid/equivalence.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "tabloid/error.hpp"

namespace tabloid {

namespace {

void require_same_length(const WeightVector& u, const WeightVector& w) {
  if (u.size() != w.size()) {
    throw ValidationError("weight vectors have lengths " + std::to_string(u.size()) + " and " +
                          std::to_string(w.size()));
  }
}

Rational mean(std::span<const Rational> values) { return sum(values) / Rational(values.size()); }

std::vector<Rational> centered(const WeightVector& w) {
  const Rational m = mean(w.values());
  std::vector<Rational> out;
  out.reserve(w.size());
  for (const auto& x : w.values()) out.push_back(x - m);
  return out;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  Rational total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) total += a[i] * b[i];
  return total;
}

}  // namespace

bool kernel_check(const SpacePtr& space, const WeightVector& w, std::size_t x, std::size_t y) {
  w.require_compatible(*space);
  space->require_distinct_pair(x, y);
  return v_diff(space, w, x, y).is_zero();
}

std::optional<OrderCertificate> order_certificate(const WeightVector& w, const WeightVector& u) {
  require_same_length(u, w);
  const bool u_trivial = u.is_trivial();
  const bool w_trivial = w.is_trivial();
  if (u_trivial && w_trivial) return OrderCertificate{1, u[0] - w[0]};
  if (u_trivial || w_trivial) return std::nullopt;

  const auto cu = centered(u);
  const auto cw = centered(w);
  std::size_t pivot = 0;
  while (cw[pivot] == 0) ++pivot;
  const Rational alpha = cu[pivot] / cw[pivot];
  if (alpha <= 0) return std::nullopt;
  for (std::size_t i = 0; i < cu.size(); ++i) {
    if (cu[i] != alpha * cw[i]) return std::nullopt;
  }
  return OrderCertificate{alpha, mean(u.values()) - alpha * mean(w.values())};
}

std::optional<CardinalCertificate> cardinal_certificate(const WeightVector& w, const WeightVector& u) {
  require_same_length(u, w);
  std::optional<std::size_t> pivot;
  for (std::size_t i = 1; i < w.size() && !pivot; ++i) {
    if (w[i] != w[0]) pivot = i;
  }
  bool u_flat = true;
  for (std::size_t i = 1; i < u.size(); ++i) u_flat = u_flat && u[i] == u[0];
  if (!pivot) {
    if (!u_flat) return std::nullopt;
    return CardinalCertificate{1, u[0] - w[0]};
  }
  const Rational alpha = (u[*pivot] - u[0]) / (w[*pivot] - w[0]);
  if (alpha <= 0) return std::nullopt;
  for (std::size_t i = 1; i < u.size(); ++i) {
    if (u[i] - u[0] != alpha * (w[i] - w[0])) return std::nullopt;
  }
  return CardinalCertificate{alpha, u[0] / alpha - w[0]};
}

bool order_equivalent(const WeightVector& u, const WeightVector& w) { return order_certificate(u, w).has_value(); }

bool cardinal_equivalent(const WeightVector& u, const WeightVector& w) {
  const bool cardinal = cardinal_certificate(u, w).has_value();
  if (cardinal != order_equivalent(u, w)) throw std::logic_error("order and cardinal equivalence disagree");
  return cardinal;
}

CanonicalWeight canonicalize(const WeightVector& w) {
  CanonicalWeight out;
  out.representative = centered(w);
  out.scale = 0;
  for (const auto& x : out.representative) {
    if (x != 0) {
      out.scale = abs(x);
      break;
    }
  }
  out.trivial = out.scale == 0;
  out.normalized = out.representative;
  if (!out.trivial) {
    for (auto& x : out.normalized) x /= out.scale;
  }
  return out;
}

const std::vector<std::vector<Rational>>& orthogonal_basis(std::size_t m) {
  static std::mutex lock;
  static std::map<std::size_t, std::vector<std::vector<Rational>>> cache;
  std::lock_guard guard(lock);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;

  std::vector<std::vector<Rational>> basis;
  for (std::size_t i = 0; i + 1 < m; ++i) {
    std::vector<Rational> f(m, 0);
    f[i] = 1;
    f[i + 1] = -1;
    for (const auto& g : basis) {
      const Rational c = dot(f, g) / dot(g, g);
      for (std::size_t j = 0; j < m; ++j) f[j] -= c * g[j];
    }
    basis.push_back(std::move(f));
  }
  return cache.emplace(m, std::move(basis)).first->second;
}

std::optional<ProjectivePoint> projective_coords(const WeightVector& w) {
  if (w.size() < 2) throw ValidationError("projective coordinates need at least two places");
  const CanonicalWeight c = canonicalize(w);
  if (c.trivial) return std::nullopt;
  ProjectivePoint point;
  for (const auto& f : orthogonal_basis(w.size())) point.coords.push_back(dot(c.representative, f) / dot(f, f));
  Rational lead = 0;
  for (const auto& x : point.coords) {
    if (x != 0) {
      lead = x;
      break;
    }
  }
  for (auto& x : point.coords) x /= lead;
  return point;
}

std::optional<Profile> separating_profile(const SpacePtr& space, const WeightVector& u, const WeightVector& w) {
  require_same_length(u, w);
  u.require_compatible(*space);
  if (space->candidate_count() < 2) return std::nullopt;
  if (u.is_trivial() || w.is_trivial() || order_equivalent(u, w)) return std::nullopt;

  const Profile vu = v_diff(space, u, 0, 1);
  const Profile vw = v_diff(space, w, 0, 1);
  Profile p = vu - (inner_product(vu, vw) / inner_product(vw, vw)) * vw;
  if (p.is_zero()) p = vu;
  return p;
}

}  // namespace tabloid
