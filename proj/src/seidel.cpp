#include "seidel.hpp"

#include <algorithm>
#include <cmath>

namespace lpred::detail {

namespace {

constexpr double kViolationEps = 1e-12;
constexpr double kCancelEps = 1e-13;
constexpr double kGapEps = 1e-9;

struct Halfspace {
  std::vector<double> a;
  double b;
  /// Magnitude of the terms folded into b; scales the zero-row feasibility test.
  double mag;
};

double cancel(double x, double y, double sum) {
  return std::abs(sum) <= kCancelEps * (std::abs(x) + std::abs(y)) ? 0.0 : sum;
}

bool violated(const Halfspace& h, const std::vector<double>& y) {
  double lhs = 0.0;
  double scale = std::abs(h.b) + h.mag;
  for (std::size_t l = 0; l < y.size(); ++l) {
    lhs += h.a[l] * y[l];
    scale += std::abs(h.a[l] * y[l]);
  }
  return lhs - h.b > kViolationEps * scale;
}

std::optional<std::vector<double>> solve_1d(double c, const std::vector<Halfspace>& rows,
                                            std::size_t count, double lo, double hi) {
  double lower = lo;
  double upper = hi;
  for (std::size_t i = 0; i < count; ++i) {
    const auto& h = rows[i];
    if (h.a[0] == 0.0) {
      if (h.b < -kViolationEps * (std::abs(h.b) + h.mag)) return std::nullopt;
      continue;
    }
    const double bound = h.b / h.a[0];
    if (h.a[0] > 0.0) upper = std::min(upper, bound);
    else lower = std::max(lower, bound);
  }
  if (lower > upper) {
    if (lower - upper > kGapEps * (1.0 + std::abs(lower) + std::abs(upper))) return std::nullopt;
    return std::vector<double>{0.5 * (lower + upper)};
  }
  return std::vector<double>{c < 0.0 ? upper : lower};
}

/// Solves over the first `count` rows; each entry of `rows` has `c.size()` coefficients.
std::optional<std::vector<double>> solve_rec(const std::vector<double>& c,
                                             const std::vector<Halfspace>& rows,
                                             std::size_t count, const std::vector<double>& lo,
                                             const std::vector<double>& hi) {
  const std::size_t k = c.size();
  if (k == 1) return solve_1d(c[0], rows, count, lo[0], hi[0]);

  std::vector<double> y(k);
  for (std::size_t j = 0; j < k; ++j) y[j] = c[j] < 0.0 ? hi[j] : lo[j];

  for (std::size_t i = 0; i < count; ++i) {
    const Halfspace& h = rows[i];
    if (!violated(h, y)) continue;

    std::size_t pivot = 0;
    for (std::size_t l = 1; l < k; ++l)
      if (std::abs(h.a[l]) > std::abs(h.a[pivot])) pivot = l;
    const double ap = h.a[pivot];
    if (ap == 0.0) return std::nullopt;  // 0 <= b with b clearly negative

    // On the plane h: y_p = beta - sum_{l != p} r_l y_l.
    std::vector<double> r(k);
    for (std::size_t l = 0; l < k; ++l) r[l] = h.a[l] / ap;
    const double beta = h.b / ap;

    auto project = [&](std::size_t l) { return l < pivot ? l : l - 1; };

    std::vector<Halfspace> sub;
    sub.reserve(i + 2);
    // The eliminated coordinate keeps its box as two general rows.
    {
      Halfspace up{std::vector<double>(k - 1), hi[pivot] - beta, std::abs(hi[pivot]) + std::abs(beta)};
      Halfspace down{std::vector<double>(k - 1), beta - lo[pivot], std::abs(lo[pivot]) + std::abs(beta)};
      for (std::size_t l = 0; l < k; ++l) {
        if (l == pivot) continue;
        up.a[project(l)] = -r[l];
        down.a[project(l)] = r[l];
      }
      sub.push_back(std::move(up));
      sub.push_back(std::move(down));
    }
    for (std::size_t g = 0; g < i; ++g) {
      const Halfspace& src = rows[g];
      const double f = src.a[pivot];
      Halfspace out{std::vector<double>(k - 1), 0.0, src.mag + std::abs(f * beta)};
      for (std::size_t l = 0; l < k; ++l) {
        if (l == pivot) continue;
        out.a[project(l)] = cancel(src.a[l], f * r[l], src.a[l] - f * r[l]);
      }
      out.b = src.b - f * beta;
      sub.push_back(std::move(out));
    }

    std::vector<double> sub_c(k - 1), sub_lo(k - 1), sub_hi(k - 1);
    for (std::size_t l = 0; l < k; ++l) {
      if (l == pivot) continue;
      sub_c[project(l)] = cancel(c[l], c[pivot] * r[l], c[l] - c[pivot] * r[l]);
      sub_lo[project(l)] = lo[l];
      sub_hi[project(l)] = hi[l];
    }

    auto z = solve_rec(sub_c, sub, sub.size(), sub_lo, sub_hi);
    if (!z) return std::nullopt;
    double yp = beta;
    for (std::size_t l = 0; l < k; ++l) {
      if (l == pivot) continue;
      y[l] = (*z)[project(l)];
      yp -= r[l] * y[l];
    }
    y[pivot] = yp;
  }
  return y;
}

}  // namespace

std::optional<Vector> boxed_lp_minimize(const Matrix& rows, const Vector& rhs, const Vector& c,
                                        double box, const std::vector<int>& order) {
  const auto k = static_cast<std::size_t>(c.size());
  std::vector<Halfspace> hs;
  hs.reserve(order.size());
  for (int idx : order) {
    Halfspace h{std::vector<double>(k), rhs(idx), 0.0};
    for (std::size_t l = 0; l < k; ++l) h.a[l] = rows(idx, static_cast<Eigen::Index>(l));
    hs.push_back(std::move(h));
  }
  std::vector<double> cv(c.data(), c.data() + k);
  std::vector<double> lo(k, -box), hi(k, box);
  auto y = solve_rec(cv, hs, hs.size(), lo, hi);
  if (!y) return std::nullopt;
  return Eigen::Map<const Vector>(y->data(), static_cast<Eigen::Index>(k));
}

std::vector<int> random_order(int n, std::mt19937_64& rng) {
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  for (int i = n - 1; i > 0; --i) {
    const auto j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
    std::swap(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]);
  }
  return order;
}

}  // namespace lpred::detail
