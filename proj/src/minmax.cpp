#include "lpred/minmax.hpp"

#include "lpred/errors.hpp"
#include "seidel.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>

namespace lpred {

namespace {

constexpr double kBoxActive = 1e-9;
/// Slack on the optimal level when searching the optimal set for a point nearest the origin.
constexpr double kLevelSlack = 1e-10;
constexpr double kTightSlack = 1e-13;

struct BoxedSolve {
  bool t_at_box = false;
  Vector x;
  double t = 0.0;
};

/// Rows of the epigraph [G_i, -1] (x, t) <= -h_i, each scaled to unit max-norm.
std::pair<Matrix, Vector> epigraph_rows(const PiecewiseMaxProblem& prob) {
  const int m = prob.pieces();
  const int d = prob.dimension();
  Matrix rows(m, d + 1);
  Vector rhs(m);
  for (int i = 0; i < m; ++i) {
    const double scale = std::max(1.0, prob.G.row(i).cwiseAbs().maxCoeff());
    rows.row(i).head(d) = prob.G.row(i) / scale;
    rows(i, d) = -1.0 / scale;
    rhs(i) = -prob.h(i) / scale;
  }
  return {std::move(rows), std::move(rhs)};
}

BoxedSolve solve_level(const PiecewiseMaxProblem& prob, double box, std::mt19937_64& rng) {
  const int d = prob.dimension();
  const auto [rows, rhs] = epigraph_rows(prob);
  Vector objective = Vector::Unit(d + 1, d);
  auto y = detail::boxed_lp_minimize(rows, rhs, objective, box, detail::random_order(prob.pieces(), rng));
  if (!y) throw NumericalError("epigraph LP reported infeasible; retry with another seed");
  BoxedSolve out;
  out.x = y->head(d);
  out.t = (*y)(d);
  out.t_at_box = out.t <= -box * (1.0 - kBoxActive);
  return out;
}

/// Optimal level from a re-solve over a box centred at `center`, where magnitudes are moderate.
double refined_level(const PiecewiseMaxProblem& prob, const Vector& center, std::mt19937_64& rng) {
  PiecewiseMaxProblem local{prob.G, prob.h + prob.G * center};
  const double f0 = evaluate(local, Vector::Zero(center.size())).value;
  const double radius = 2.0 * (1.0 + center.cwiseAbs().maxCoeff() + std::abs(f0));
  const BoxedSolve lvl = solve_level(local, radius, rng);
  return std::max(lvl.t, evaluate(local, lvl.x).value);
}

/// Among points with f(x) <= level, one of least infinity-norm. Returns that norm too.
std::optional<std::pair<Vector, double>> nearest_in_level_set(const PiecewiseMaxProblem& prob,
                                                              double level, double rel_slack,
                                                              double box, std::mt19937_64& rng) {
  const int m = prob.pieces();
  const int d = prob.dimension();
  // Variables (x, s): G_i x <= level - h_i,  x_j - s <= 0,  -x_j - s <= 0.
  Matrix rows = Matrix::Zero(m + 2 * d, d + 1);
  Vector rhs(m + 2 * d);
  const double slack = rel_slack * (1.0 + std::abs(level));
  for (int i = 0; i < m; ++i) {
    const double scale = std::max(1.0, prob.G.row(i).cwiseAbs().maxCoeff());
    rows.row(i).head(d) = prob.G.row(i) / scale;
    rhs(i) = (level + slack - prob.h(i)) / scale;
  }
  for (int j = 0; j < d; ++j) {
    rows(m + 2 * j, j) = 1.0;
    rows(m + 2 * j, d) = -1.0;
    rows(m + 2 * j + 1, j) = -1.0;
    rows(m + 2 * j + 1, d) = -1.0;
    rhs(m + 2 * j) = 0.0;
    rhs(m + 2 * j + 1) = 0.0;
  }
  Vector objective = Vector::Unit(d + 1, d);
  auto y = detail::boxed_lp_minimize(rows, rhs, objective, box,
                                     detail::random_order(static_cast<int>(rows.rows()), rng));
  if (!y) return std::nullopt;
  return std::pair{Vector(y->head(d)), (*y)(d)};
}

MinMaxResult minimized_at(const PiecewiseMaxProblem& prob, Vector x) {
  MinMaxResult res;
  res.status = MinMaxStatus::Minimized;
  res.value = evaluate(prob, x).value;
  res.active_set = active_pieces(prob, x);
  res.x_star = std::move(x);
  return res;
}

MinMaxResult unbounded_below() {
  MinMaxResult res;
  res.status = MinMaxStatus::UnboundedBelow;
  return res;
}

}  // namespace

void check_problem(const PiecewiseMaxProblem& prob) {
  if (prob.pieces() < 1) throw InputError("min-max problem needs at least one piece");
  if (prob.h.size() != prob.G.rows())
    throw InputError("h has " + std::to_string(prob.h.size()) + " entries but G has " +
                     std::to_string(prob.G.rows()) + " rows");
  if (!prob.G.allFinite() || !prob.h.allFinite())
    throw InputError("min-max problem has a non-finite entry");
}

Evaluation evaluate(const PiecewiseMaxProblem& prob, const Vector& x) {
  if (prob.pieces() < 1) throw DimensionError("min-max problem has no pieces");
  if (x.size() != prob.G.cols())
    throw DimensionError("point has length " + std::to_string(x.size()) + ", expected " +
                         std::to_string(prob.G.cols()));
  Evaluation best{prob.G.row(0).dot(x) + prob.h(0), 0};
  for (int i = 1; i < prob.pieces(); ++i) {
    const double v = prob.G.row(i).dot(x) + prob.h(i);
    if (v > best.value) best = {v, i};
  }
  return best;
}

std::vector<int> active_pieces(const PiecewiseMaxProblem& prob, const Vector& x, double rel_tol) {
  const double f = evaluate(prob, x).value;
  const double band = rel_tol * (1.0 + std::abs(f));
  std::vector<int> out;
  for (int i = 0; i < prob.pieces(); ++i)
    if (prob.G.row(i).dot(x) + prob.h(i) >= f - band) out.push_back(i);
  return out;
}

MinMaxResult solve_exact(const PiecewiseMaxProblem& prob, std::uint64_t seed,
                         const ExactOptions& options) {
  check_problem(prob);
  const int d = prob.dimension();
  if (d > options.max_dimension)
    throw DimensionError("exact min-max backend is limited to d <= " +
                         std::to_string(options.max_dimension) + " (got " + std::to_string(d) +
                         "); use the subgradient backend");
  if (d == 0) return minimized_at(prob, Vector(0));

  double max_grad = 0.0;
  for (int i = 0; i < prob.pieces(); ++i) max_grad = std::max(max_grad, prob.G.row(i).norm());
  double box = 1e6 * (1.0 + prob.h.cwiseAbs().maxCoeff() + max_grad);

  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 2; ++attempt, box *= 2.0) {
    const BoxedSolve lvl = solve_level(prob, box, rng);
    if (lvl.t_at_box) continue;

    const double limit = box * (1.0 - kBoxActive);
    if (lvl.x.cwiseAbs().maxCoeff() < limit) return minimized_at(prob, lvl.x);

    // The optimum touched the x-box: either f is flat along some direction (pick the
    // optimal point nearest the origin) or the descent was cut off by the box.
    const double level = std::max(lvl.t, evaluate(prob, lvl.x).value);
    auto found = nearest_in_level_set(prob, level, kLevelSlack, box, rng);
    if (!found) throw NumericalError("level-set LP reported infeasible; retry with another seed");
    auto& [x, radius] = *found;
    if (radius < limit) {
      // Second pass with a tighter level taken near x.
      const double fx = evaluate(prob, x).value;
      auto tight = nearest_in_level_set(prob, refined_level(prob, x, rng), kTightSlack, box, rng);
      if (tight && evaluate(prob, tight->first).value <= fx)
        return minimized_at(prob, std::move(tight->first));
      return minimized_at(prob, std::move(x));
    }
  }
  return unbounded_below();
}

MinMaxResult solve_minmax(const PiecewiseMaxProblem& prob, const MinMaxOptions& options) {
  switch (options.backend) {
    case Backend::Exact: return solve_exact(prob, options.seed, options.exact);
    case Backend::Subgradient: return solve_subgradient(prob, options.subgradient);
  }
  throw InputError("unknown min-max backend");
}

}  // namespace lpred
