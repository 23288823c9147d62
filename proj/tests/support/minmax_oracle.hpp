#pragma once

#include "lpred/minmax.hpp"

#include <optional>
#include <vector>

namespace lpred::testing {

/// Brute-force reference for min_x max_i (G_i·x + h_i), independent of the LP backends.
struct MinMaxReference {
  bool bounded = false;
  double value = 0.0;
  Vector x;
};

/// Bounded iff 0 lies in the convex hull of the gradients (checked over all subsets of at
/// most d + 1 pieces). The minimum is then the smallest objective over every (d+1)-subset's
/// equalization point, plus every d-subset of the pieces equalized with the minimum found
/// in the lineality-free directions. Assumes the gradients span R^d when bounded.
MinMaxReference brute_force_minmax(const PiecewiseMaxProblem& prob);

/// Solves a square system by Gaussian elimination; empty when (near) singular.
std::optional<Vector> solve_square(const Matrix& m, const Vector& rhs);

/// Whether 0 is a convex combination of the rows of `gradients`, to within `tol`.
bool zero_in_hull(const Matrix& gradients, double tol);

}  // namespace lpred::testing
