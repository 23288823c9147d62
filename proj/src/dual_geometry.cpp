#include "lpred/dual_geometry.hpp"

#include "lpred/errors.hpp"

#include <cmath>

namespace lpred {

namespace {

void require_same_dim(const Plane& pl, const Point& p) {
  if (pl.dim() != p.dim())
    throw DimensionError("plane has dimension " + std::to_string(pl.dim()) + ", point has " +
                         std::to_string(p.dim()));
}

double signed_value(const Plane& pl, const Point& p) { return pl.pi.dot(p.coords) - pl.sigma; }

double incidence_band(const Plane& pl, const Point& p, double eps) {
  return eps * (1.0 + std::abs(pl.sigma) + pl.pi.norm() * p.coords.norm());
}

}  // namespace

Plane dual_of_point(const Point& p) {
  if (p.dim() == 0 || p.coords.isZero(0.0))
    throw GeometryError("the zero point has no dual plane");
  return Plane{p.coords, -1.0};
}

bool passes_through_origin(const Plane& pl) {
  const double norm = pl.pi.norm();
  return norm == 0.0 || std::abs(pl.sigma) / norm <= kDualEpsilon;
}

Point dual_of_plane(const Plane& pl) {
  if (passes_through_origin(pl)) throw GeometryError("plane passes through the origin; no dual point");
  return Point{-pl.pi / pl.sigma};
}

double z_intercept(const Plane& pl) {
  if (pl.dim() == 0) throw DimensionError("empty plane");
  const double pz = pl.pi(pl.dim() - 1);
  if (pz == 0.0) throw GeometryError("plane is parallel to the z-axis");
  return pl.sigma / pz;
}

Side side_of(const Plane& pl, const Point& p) {
  require_same_dim(pl, p);
  const double v = signed_value(pl, p);
  const double band = incidence_band(pl, p, kIncidenceEpsilon);
  if (v > band) return Side::Positive;
  if (v < -band) return Side::Negative;
  return Side::Incident;
}

bool same_side_as_origin(const Plane& pl, const Point& p) {
  if (passes_through_origin(pl)) throw GeometryError("origin lies on the plane");
  const Side s = side_of(pl, p);
  const Side origin = side_of(pl, Point{Vector::Zero(pl.dim())});
  return s != Side::Incident && s == origin;
}

bool is_feasible_dual_plane(const Plane& pl, std::span<const Point> constraint_duals, double tol) {
  if (passes_through_origin(pl)) throw GeometryError("origin lies on the plane");
  if (constraint_duals.empty()) throw InputError("constraint dual set is empty");
  // Origin side: sign of (pi·0 - sigma).
  const double origin_sign = pl.sigma < 0.0 ? 1.0 : -1.0;
  for (const Point& q : constraint_duals) {
    require_same_dim(pl, q);
    const double v = signed_value(pl, q) * origin_sign;
    if (v < -incidence_band(pl, q, tol)) return false;
  }
  return true;
}

}  // namespace lpred
