#pragma once

#include "lpred/model.hpp"

#include <optional>
#include <utility>

namespace lpred {

/// Shift of the coordinate origin to a strictly interior point p0: x = y + p0.
struct Translation {
  Vector p0;
};

/// R = D (I - 2 u u^T), D = diag(-1, 1, ..., 1), stored implicitly.
///
/// The Householder reflection maps the unit objective onto e_d; negating the first row makes
/// det R = +1 while leaving R c_hat = e_d intact, since (H c_hat)_1 = 0 for d >= 2. When the
/// objective already points along +e_d, `u_hat` is empty and R is the identity.
struct HouseholderRotation {
  int dimension = 0;
  std::optional<Vector> u_hat;
  bool negate_first_row = false;

  bool is_identity() const { return !u_hat && !negate_first_row; }
  /// Materializes R; O(d^2), intended for diagnostics.
  Matrix matrix() const;
};

struct ProblemTransform {
  HouseholderRotation rotation;
  Translation translation;
};

/// b' = b - A p0. Throws NotInteriorError naming the first row with A_i·p0 >= b_i.
std::pair<LinearProgram, Translation> make_origin_strictly_feasible(const LinearProgram& lp,
                                                                     const Vector& p0);

/// Rotation taking c / ||c|| to e_d. Throws GeometryError for c = 0, DimensionError for d < 2.
HouseholderRotation rotation_to_last_axis(const Vector& c);

/// R v, or R^T v when `inverse`. O(d).
Vector apply_rotation(const HouseholderRotation& rot, const Vector& v, bool inverse = false);

/// Rows of A become R A_i, the objective becomes ||c|| e_d, b is unchanged.
LinearProgram rotate_problem(const LinearProgram& lp, const HouseholderRotation& rot);

/// x = R^T y + p0.
Vector recover_solution(const ProblemTransform& t, const Vector& y);

/// y = R (x - p0); the inverse of recover_solution.
Vector forward_transform(const ProblemTransform& t, const Vector& x);

}  // namespace lpred
