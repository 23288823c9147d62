#pragma once

#include "lpred/model.hpp"

#include <span>

namespace lpred {

/// A point of R^d. The last coordinate is its z value.
struct Point {
  Vector coords;

  Eigen::Index dim() const { return coords.size(); }
  double z() const { return coords(coords.size() - 1); }
};

/// The hyperplane {p : pi·p = sigma}.
struct Plane {
  Vector pi;
  double sigma = 0.0;

  Eigen::Index dim() const { return pi.size(); }
};

enum class Side { Positive, Negative, Incident };

/// |sigma| / ||pi|| at or below this counts as passing through the origin.
inline constexpr double kDualEpsilon = 1e-12;
/// Relative band for Side::Incident: |pi·p - sigma| <= eps (1 + |sigma| + ||pi|| ||p||).
inline constexpr double kIncidenceEpsilon = 1e-12;

/// p -> the plane (p, -1). Throws GeometryError for the zero point.
Plane dual_of_point(const Point& p);

/// (pi, sigma) -> the point -pi/sigma. Throws GeometryError for planes through the origin.
Point dual_of_plane(const Plane& pl);

/// Height at which the plane crosses the last coordinate axis, sigma / pi_d.
/// Throws GeometryError when the plane is parallel to that axis.
double z_intercept(const Plane& pl);

bool passes_through_origin(const Plane& pl);

Side side_of(const Plane& pl, const Point& p);

/// True iff p lies strictly on the same side of pl as the origin.
/// Throws GeometryError when the origin is on pl.
bool same_side_as_origin(const Plane& pl, const Point& p);

/// A plane is a feasible dual plane when every constraint dual point and the origin lie on
/// one side of it. Points within `tol` (relative, as for Side::Incident) of the plane count
/// as being on the origin's side.
bool is_feasible_dual_plane(const Plane& pl, std::span<const Point> constraint_duals,
                            double tol = kIncidenceEpsilon);

}  // namespace lpred
