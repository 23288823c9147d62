#pragma once

#include "lpred/model.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace lpred {

/// f(x) = max_i (G_i·x + h_i) over x in R^d, with m = G.rows() affine pieces.
struct PiecewiseMaxProblem {
  Matrix G;
  Vector h;

  int dimension() const { return static_cast<int>(G.cols()); }
  int pieces() const { return static_cast<int>(G.rows()); }
};

enum class MinMaxStatus { Minimized, UnboundedBelow };

struct MinMaxResult {
  MinMaxStatus status = MinMaxStatus::Minimized;
  std::optional<Vector> x_star;
  std::optional<double> value;
  /// Pieces within tolerance of the max at x_star, ascending.
  std::optional<std::vector<int>> active_set;
  /// False only when the iterative backend could not certify its answer.
  bool converged = true;
  int iterations = 0;
};

struct Evaluation {
  double value;
  int argmax_index;  ///< smallest index attaining the max
};

/// Throws DimensionError on a length mismatch or an empty problem.
Evaluation evaluate(const PiecewiseMaxProblem& prob, const Vector& x);

/// Throws InputError unless m >= 1, shapes agree and every entry is finite.
void check_problem(const PiecewiseMaxProblem& prob);

struct ExactOptions {
  /// Largest d accepted by the exact backend.
  int max_dimension = 10;
};

/// Exact minimization by randomized incremental LP on the epigraph
///   minimize t  s.t.  G_i·x + h_i <= t,
/// inside a box |x_j|, |t| <= M that is doubled once before declaring the problem unbounded.
/// Results are a deterministic function of (prob, seed).
MinMaxResult solve_exact(const PiecewiseMaxProblem& prob, std::uint64_t seed = 0,
                         const ExactOptions& options = {});

enum class StepRule {
  Constant,     ///< alpha_k = initial_step
  Diminishing,  ///< alpha_k = initial_step / sqrt(k + 1)
  Adaptive,     ///< grow by 1.5 after an improving step, halve otherwise
};

struct SubgradientParams {
  int max_iters = 20000;
  StepRule step_rule = StepRule::Adaptive;
  double initial_step = 1.0;
  double tolerance = 1e-6;
  /// Starting iterate; the origin when absent.
  std::optional<Vector> start;
};

/// Normalized subgradient descent followed by an active-set polish. Never throws for a
/// well-formed problem; `converged` is set when the final point carries an optimality
/// certificate (0 in the convex hull of the active gradients).
MinMaxResult solve_subgradient(const PiecewiseMaxProblem& prob, const SubgradientParams& params = {});

/// Values above which a subgradient iterate is taken as evidence of unboundedness.
inline constexpr double kSubgradientUnboundedValue = -1e12;

enum class Backend { Exact, Subgradient };

struct MinMaxOptions {
  Backend backend = Backend::Exact;
  std::uint64_t seed = 0;
  ExactOptions exact;
  SubgradientParams subgradient;
};

/// Dispatches to the selected backend.
MinMaxResult solve_minmax(const PiecewiseMaxProblem& prob, const MinMaxOptions& options);

/// Pieces within `rel_tol * (1 + |f(x)|)` of f(x).
std::vector<int> active_pieces(const PiecewiseMaxProblem& prob, const Vector& x,
                               double rel_tol = 1e-9);

}  // namespace lpred
