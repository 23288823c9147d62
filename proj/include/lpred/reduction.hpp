#pragma once

#include "lpred/dual_geometry.hpp"
#include "lpred/minmax.hpp"
#include "lpred/model.hpp"
#include "lpred/transforms.hpp"

#include <optional>
#include <span>
#include <vector>

namespace lpred {

/// The lower supporting plane search over the constraint dual points.
///
/// A non-vertical plane z = w·x' + t lies below every dual point q iff
/// t <= q_z - w·q' for all q. Maximizing that intercept is the min-max instance
///   minimize_w max_q (w·q' - q_z),
/// whose optimal value is -t*. `minmax` has one piece per dual point and d - 1 variables.
struct SupportPlaneProblem {
  std::vector<Point> duals;
  PiecewiseMaxProblem minmax;
};

enum class PhaseOneStatus { StrictInterior, NoStrictInterior };

struct PhaseOneResult {
  PhaseOneStatus status = PhaseOneStatus::NoStrictInterior;
  std::optional<Vector> p0;
  /// max_i (A_i·p0 - b_i); negative when p0 is strictly interior.
  std::optional<double> margin;
};

inline constexpr double kStrictEpsilon = 1e-9;
inline constexpr double kUnboundedEpsilon = 1e-9;

/// The min-max instance max_i (A_i·p - b_i), i.e. G = A, h = -b.
PiecewiseMaxProblem phase1_problem(const LinearProgram& lp);

/// Minimizes max(Ap - b). StrictInterior iff the optimum is below -eps_strict. When the
/// minimum is unbounded below, a point with max(Ap - b) <= -(1 + max|b|) is returned.
PhaseOneResult phase1(const LinearProgram& lp, const MinMaxOptions& options = {},
                      double eps_strict = kStrictEpsilon);

/// [-A_i / b_i] in row order. Throws NotInteriorError naming the first row with b_i <= 0.
std::vector<Point> dual_constraint_points(const LinearProgram& lp);

/// Throws InputError for an empty set and DimensionError for d < 2 or mixed dimensions.
SupportPlaneProblem build_support_problem(std::span<const Point> duals);

struct Recovery {
  SolveStatus status = SolveStatus::Unbounded;
  /// t*, the best achievable intercept; absent when the min-max is unbounded below.
  std::optional<double> intercept;
  /// The optimal supporting plane ((w*, -1), -t*) and its dual point (w*, -1) / t*.
  std::optional<Plane> plane;
  std::optional<Point> point;
};

/// Throws NumericalError when `result` does not certify against `spp`.
Recovery classify_and_recover(const SupportPlaneProblem& spp, const MinMaxResult& result,
                              double eps_unbounded = kUnboundedEpsilon);

struct SolveOptions {
  MinMaxOptions minmax;
  double eps_unbounded = kUnboundedEpsilon;
  double eps_strict = kStrictEpsilon;
  /// Stop once the support problem is built (no min-max solve, no recovery).
  bool build_only = false;
};

/// Every intermediate the pipeline produced, for inspection and plotting.
struct SolveTrace {
  Solution solution;
  std::optional<PhaseOneResult> phase_one;
  /// The translated and rotated problem, in maximize form with objective ||c|| e_d.
  std::optional<LinearProgram> transformed;
  std::optional<ProblemTransform> transform;
  std::optional<SupportPlaneProblem> support;
  std::optional<MinMaxResult> minmax;
  std::optional<Recovery> recovery;
};

SolveTrace solve_traced(const LinearProgram& lp, const std::optional<Vector>& interior_hint = {},
                        const SolveOptions& options = {});

/// validate -> phase 1 (skipped for a verified hint) -> translate -> rotate -> dualize ->
/// support min-max -> classify -> map back. The objective is c·x in the caller's sense.
Solution solve(const LinearProgram& lp, const std::optional<Vector>& interior_hint = {},
               const SolveOptions& options = {});

}  // namespace lpred
