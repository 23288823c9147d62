#include "lpred/minmax.hpp"

#include <Eigen/LU>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace lpred {

namespace {

constexpr int kPolishRounds = 8;

struct Candidate {
  Vector x;
  double value;
  bool certified;
};

/// Solves the (d+1) equalities G_i·x - t = -h_i for i in `subset`, and checks whether
/// 0 is a convex combination of the subset's gradients (which certifies optimality when the
/// subset is exactly the active set).
std::optional<Candidate> equalize(const PiecewiseMaxProblem& prob, const std::vector<int>& subset) {
  const int d = prob.dimension();
  Matrix sys(d + 1, d + 1);
  Vector rhs(d + 1);
  for (int r = 0; r <= d; ++r) {
    sys.row(r).head(d) = prob.G.row(subset[static_cast<std::size_t>(r)]);
    sys(r, d) = -1.0;
    rhs(r) = -prob.h(subset[static_cast<std::size_t>(r)]);
  }
  Eigen::FullPivLU<Matrix> lu(sys);
  if (!lu.isInvertible()) return std::nullopt;
  const Vector sol = lu.solve(rhs);
  Vector x = sol.head(d);
  const double level = sol(d);
  if (!x.allFinite()) return std::nullopt;
  const double value = evaluate(prob, x).value;

  // Barycentric weights: sum_i lambda_i G_i = 0, sum_i lambda_i = 1.
  Matrix weights_sys(d + 1, d + 1);
  weights_sys.topRows(d) = sys.leftCols(d).transpose();
  weights_sys.row(d).setOnes();
  Vector target = Vector::Unit(d + 1, d);
  const Vector lambda = Eigen::FullPivLU<Matrix>(weights_sys).solve(target);
  const bool hull = lambda.allFinite() && lambda.minCoeff() >= -1e-12;
  const bool tight = value <= level + 1e-9 * (1.0 + std::abs(level));
  return Candidate{std::move(x), value, hull && tight};
}

/// Calls fn on every k-subset of `pool` (lexicographic order).
template <typename Fn>
void for_each_subset(const std::vector<int>& pool, int k, Fn&& fn) {
  const int n = static_cast<int>(pool.size());
  if (k > n || k <= 0) return;
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<int> subset(static_cast<std::size_t>(k));
  while (true) {
    for (int i = 0; i < k; ++i)
      subset[static_cast<std::size_t>(i)] = pool[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
    fn(subset);
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace

MinMaxResult solve_subgradient(const PiecewiseMaxProblem& prob, const SubgradientParams& params) {
  check_problem(prob);
  const int d = prob.dimension();
  Vector x = params.start.value_or(Vector::Zero(d));
  if (x.size() != d) x = Vector::Zero(d);

  Vector best_x = x;
  Evaluation current = evaluate(prob, x);
  double best = current.value;
  double alpha = params.initial_step;
  double previous = current.value;
  bool stationary = false;
  int iter = 0;

  MinMaxResult res;
  for (; iter < params.max_iters; ++iter) {
    if (best < kSubgradientUnboundedValue) {
      res.status = MinMaxStatus::UnboundedBelow;
      res.converged = true;
      res.iterations = iter;
      return res;
    }
    const auto g = prob.G.row(current.argmax_index);
    const double gnorm = g.norm();
    if (gnorm == 0.0) {
      // The maximal piece is constant, so f >= its value everywhere.
      stationary = true;
      break;
    }
    double step = params.initial_step;
    switch (params.step_rule) {
      case StepRule::Constant: break;
      case StepRule::Diminishing: step = params.initial_step / std::sqrt(iter + 1.0); break;
      case StepRule::Adaptive: step = alpha; break;
    }
    if (step < params.tolerance * 1e-6 * (1.0 + x.norm())) break;

    x -= (step / gnorm) * g.transpose();
    current = evaluate(prob, x);
    if (current.value < best) {
      best = current.value;
      best_x = x;
    }
    alpha *= current.value < previous ? 1.5 : 0.5;
    previous = current.value;
  }
  res.iterations = iter;

  bool certified = stationary;
  if (!stationary && prob.pieces() > d) {
    // Polish: equalize subsets of the most nearly active pieces, moving to the best
    // equalization point until no subset improves on it.
    const int pool = std::min(prob.pieces(), d + 6);
    for (int round = 0; round < kPolishRounds && !certified; ++round) {
      std::vector<int> order(static_cast<std::size_t>(prob.pieces()));
      std::iota(order.begin(), order.end(), 0);
      const Vector values = prob.G * best_x + prob.h;
      std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return values(a) > values(b); });
      order.resize(static_cast<std::size_t>(pool));
      bool moved = false;
      for_each_subset(order, d + 1, [&](const std::vector<int>& subset) {
        auto cand = equalize(prob, subset);
        if (!cand) return;
        const bool better = cand->value < best - 1e-15 * (1.0 + std::abs(best));
        const bool certifies = cand->certified && !certified &&
                               cand->value <= best + params.tolerance * (1.0 + std::abs(best));
        if (better || certifies) {
          best = cand->value;
          best_x = cand->x;
          certified = cand->certified;
          moved = true;
        }
      });
      if (!moved) break;
    }
  }

  if (best < kSubgradientUnboundedValue) {
    res.status = MinMaxStatus::UnboundedBelow;
    return res;
  }
  res.status = MinMaxStatus::Minimized;
  res.value = evaluate(prob, best_x).value;
  res.active_set = active_pieces(prob, best_x);
  res.x_star = std::move(best_x);
  res.converged = certified;
  return res;
}

}  // namespace lpred
