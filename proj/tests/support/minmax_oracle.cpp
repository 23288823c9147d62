#include "support/minmax_oracle.hpp"

#include <cmath>
#include <limits>
#include <numeric>

namespace lpred::testing {

namespace {

template <typename Fn>
void subsets(int n, int k, Fn&& fn) {
  if (k > n || k < 0) return;
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    fn(idx);
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

double max_of_pieces(const PiecewiseMaxProblem& prob, const Vector& x) {
  double best = -std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < prob.G.rows(); ++i) {
    double v = prob.h(i);
    for (Eigen::Index j = 0; j < x.size(); ++j) v += prob.G(i, j) * x(j);
    best = std::max(best, v);
  }
  return best;
}

}  // namespace

std::optional<Vector> solve_square(const Matrix& m0, const Vector& rhs0) {
  Matrix m = m0;
  Vector rhs = rhs0;
  const Eigen::Index n = m.rows();
  double scale = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) scale = std::max(scale, m.row(i).cwiseAbs().maxCoeff());
  if (scale == 0.0) return n == 0 ? std::optional<Vector>(Vector(0)) : std::nullopt;
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index p = c;
    for (Eigen::Index r = c + 1; r < n; ++r)
      if (std::abs(m(r, c)) > std::abs(m(p, c))) p = r;
    if (std::abs(m(p, c)) <= 1e-12 * scale) return std::nullopt;
    m.row(p).swap(m.row(c));
    std::swap(rhs(p), rhs(c));
    for (Eigen::Index r = c + 1; r < n; ++r) {
      const double f = m(r, c) / m(c, c);
      for (Eigen::Index k = c; k < n; ++k) m(r, k) -= f * m(c, k);
      rhs(r) -= f * rhs(c);
    }
  }
  Vector x(n);
  for (Eigen::Index i = n - 1; i >= 0; --i) {
    double s = rhs(i);
    for (Eigen::Index j = i + 1; j < n; ++j) s -= m(i, j) * x(j);
    x(i) = s / m(i, i);
  }
  return x;
}

bool zero_in_hull(const Matrix& gradients, double tol) {
  const int m = static_cast<int>(gradients.rows());
  const int d = static_cast<int>(gradients.cols());
  bool found = false;
  for (int k = 1; k <= std::min(m, d + 1) && !found; ++k) {
    subsets(m, k, [&](const std::vector<int>& s) {
      if (found) return;
      // Least squares on [G_S^T; 1] lambda = [0; 1] through the normal equations.
      Matrix sys(d + 1, k);
      for (int c = 0; c < k; ++c) {
        sys.col(c).head(d) = gradients.row(s[static_cast<std::size_t>(c)]).transpose();
        sys(d, c) = 1.0;
      }
      Vector target = Vector::Zero(d + 1);
      target(d) = 1.0;
      auto lambda = solve_square(sys.transpose() * sys, sys.transpose() * target);
      if (!lambda) return;
      if (lambda->minCoeff() < -tol) return;
      if ((sys * *lambda - target).norm() <= tol) found = true;
    });
  }
  return found;
}

MinMaxReference brute_force_minmax(const PiecewiseMaxProblem& prob) {
  const int m = prob.pieces();
  const int d = prob.dimension();
  MinMaxReference ref;
  if (!zero_in_hull(prob.G, 1e-12)) return ref;

  ref.bounded = true;
  ref.value = std::numeric_limits<double>::infinity();
  if (d == 0) {
    ref.value = prob.h.maxCoeff();
    ref.x = Vector(0);
    return ref;
  }
  // Vertices of the epigraph: d + 1 pieces equal to a common level t.
  subsets(m, d + 1, [&](const std::vector<int>& s) {
    Matrix sys(d + 1, d + 1);
    Vector rhs(d + 1);
    for (int r = 0; r <= d; ++r) {
      sys.row(r).head(d) = prob.G.row(s[static_cast<std::size_t>(r)]);
      sys(r, d) = -1.0;
      rhs(r) = -prob.h(s[static_cast<std::size_t>(r)]);
    }
    auto sol = solve_square(sys, rhs);
    if (!sol) return;
    const Vector x = sol->head(d);
    const double v = max_of_pieces(prob, x);
    if (v < ref.value) {
      ref.value = v;
      ref.x = x;
    }
  });
  // Edges of the epigraph meeting a single piece region: d pieces equal, level free. Any
  // point on such an edge bounds the minimum from above; solve with the last coordinate of
  // x pinned at each candidate vertex found so far so degenerate ties are still covered.
  if (ref.x.size() == d) {
    subsets(m, d, [&](const std::vector<int>& s) {
      for (int pin = 0; pin < d; ++pin) {
        Matrix sys(d + 1, d + 1);
        Vector rhs(d + 1);
        for (int r = 0; r < d; ++r) {
          sys.row(r).head(d) = prob.G.row(s[static_cast<std::size_t>(r)]);
          sys(r, d) = -1.0;
          rhs(r) = -prob.h(s[static_cast<std::size_t>(r)]);
        }
        sys.row(d).setZero();
        sys(d, pin) = 1.0;
        rhs(d) = ref.x(pin);
        auto sol = solve_square(sys, rhs);
        if (!sol) continue;
        const double v = max_of_pieces(prob, sol->head(d));
        if (v < ref.value) {
          ref.value = v;
          ref.x = sol->head(d);
        }
      }
    });
  }
  return ref;
}

}  // namespace lpred::testing
