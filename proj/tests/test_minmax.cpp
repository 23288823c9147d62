#include "lpred/errors.hpp"
#include "lpred/minmax.hpp"
#include "support/generators.hpp"
#include "support/minmax_oracle.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

using namespace lpred;

namespace {

PiecewiseMaxProblem vee(double left, double right) {
  return {Matrix{{1}, {-1}}, Vector{{left, right}}};
}

/// Smallest ||sum lambda_i g_i|| over the simplex, searched on a 1e-3 grid in all but the
/// last two weights; the last two are optimized exactly along their segment.
double min_hull_norm_on_grid(const std::vector<Vector>& g) {
  const int k = static_cast<int>(g.size());
  if (k == 1) return g[0].norm();
  constexpr int steps = 1000;
  double best = INFINITY;
  auto finish = [&](const Vector& partial, double remaining) {
    // partial + remaining * (s g_{k-2} + (1 - s) g_{k-1}), s in [0, 1].
    const Vector a = partial + remaining * g[static_cast<std::size_t>(k - 1)];
    const Vector dir = remaining * (g[static_cast<std::size_t>(k - 2)] - g[static_cast<std::size_t>(k - 1)]);
    double s = dir.squaredNorm() > 0 ? -a.dot(dir) / dir.squaredNorm() : 0.0;
    s = std::clamp(s, 0.0, 1.0);
    best = std::min(best, (a + s * dir).norm());
  };
  if (k == 2) {
    finish(Vector::Zero(g[0].size()), 1.0);
  } else if (k == 3) {
    for (int i = 0; i <= steps; ++i) {
      const double w = static_cast<double>(i) / steps;
      finish(w * g[0], 1.0 - w);
    }
  } else if (k == 4) {
    for (int i = 0; i <= steps; ++i)
      for (int j = 0; i + j <= steps; ++j) {
        const double wi = static_cast<double>(i) / steps, wj = static_cast<double>(j) / steps;
        finish(wi * g[0] + wj * g[1], 1.0 - wi - wj);
      }
  }
  return best;
}

}  // namespace

TEST_CASE("evaluate") {
  const auto ev = evaluate(vee(-3, -1), Vector{{1}});
  CHECK(ev.value == -2.0);
  CHECK(ev.argmax_index == 0);

  const PiecewiseMaxProblem p{Matrix{{1, 2}, {3, 4}, {5, 6}}, Vector{{0.5, 2.0, -1.0}}};
  const auto at_zero = evaluate(p, Vector::Zero(2));
  CHECK(at_zero.value == 2.0);
  CHECK(at_zero.argmax_index == 1);

  const PiecewiseMaxProblem constant{Matrix{{0, 0}}, Vector{{5}}};
  CHECK(evaluate(constant, Vector{{123, -7}}).value == 5.0);
  CHECK(evaluate(constant, Vector{{123, -7}}).argmax_index == 0);
  CHECK_THROWS_AS(evaluate(constant, Vector{{1}}), DimensionError);
}

TEST_CASE("solve_exact examples") {
  auto res = solve_exact(vee(-3, -1));
  REQUIRE(res.status == MinMaxStatus::Minimized);
  CHECK((*res.x_star)(0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(*res.value == doctest::Approx(-2.0).epsilon(1e-12));
  CHECK(*res.active_set == std::vector<int>{0, 1});

  CHECK(solve_exact({Matrix{{1, 0}}, Vector{{0}}}).status == MinMaxStatus::UnboundedBelow);

  res = solve_exact(vee(0, 0));
  REQUIRE(res.status == MinMaxStatus::Minimized);
  CHECK(std::abs((*res.x_star)(0)) <= 1e-12);
  CHECK(std::abs(*res.value) <= 1e-12);
}

TEST_CASE("solve_exact picks a finite point on flat optima") {
  const auto res = solve_exact({Matrix{{0, 0}}, Vector{{5}}});
  REQUIRE(res.status == MinMaxStatus::Minimized);
  CHECK(*res.value == 5.0);
  CHECK(res.x_star->norm() <= 1e-6);

  // Flat along x2, V-shaped in x1.
  const auto slab = solve_exact({Matrix{{1, 0}, {-1, 0}}, Vector{{-1, 0}}});
  REQUIRE(slab.status == MinMaxStatus::Minimized);
  CHECK(*slab.value == doctest::Approx(-0.5));
  CHECK(std::abs((*slab.x_star)(1)) <= 1.0);
}

TEST_CASE("solve_exact input checks") {
  CHECK_THROWS_AS(solve_exact({Matrix(0, 2), Vector(0)}), InputError);
  CHECK_THROWS_AS(solve_exact({Matrix{{1, 0}}, Vector{{0, 1}}}), InputError);
  PiecewiseMaxProblem big{Matrix::Ones(3, 11), Vector::Zero(3)};
  CHECK_THROWS_AS(solve_exact(big), DimensionError);
  CHECK_NOTHROW(solve_exact(big, 0, ExactOptions{11}));
}

TEST_CASE("solve_exact agrees with brute force") {
  testing::Rng rng(41);
  int bounded = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int d = 1 + trial % 3;
    const int m = 1 + static_cast<int>(rng() % 8);
    const auto prob = testing::random_minmax(rng, d, m);
    const auto ref = testing::brute_force_minmax(prob);
    const auto res = solve_exact(prob, static_cast<std::uint64_t>(trial));
    CAPTURE(trial);
    REQUIRE((res.status == MinMaxStatus::Minimized) == ref.bounded);
    if (!ref.bounded) continue;
    ++bounded;
    CHECK(std::abs(*res.value - ref.value) <= 1e-8);
    CHECK(std::abs(evaluate(prob, *res.x_star).value - *res.value) <= 1e-9 * (1 + std::abs(*res.value)));
  }
  CHECK(bounded > 40);
}

TEST_CASE("zero lies in the hull of the active gradients") {
  testing::Rng rng(43);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const int d = 1 + trial % 3;
    const auto prob = testing::random_minmax(rng, d, d + 1 + static_cast<int>(rng() % 5));
    const auto res = solve_exact(prob, 1);
    if (res.status != MinMaxStatus::Minimized) continue;
    std::vector<Vector> grads;
    double scale = 0.0;
    for (int i : active_pieces(prob, *res.x_star, 1e-9)) {
      grads.push_back(prob.G.row(i).transpose());
      scale = std::max(scale, grads.back().norm());
    }
    REQUIRE(grads.size() <= 4);
    CHECK(min_hull_norm_on_grid(grads) <= 1e-3 * static_cast<double>(grads.size()) * scale);
    ++checked;
  }
  CHECK(checked > 10);
}

TEST_CASE("seed determinism and permutation invariance") {
  testing::Rng rng(47);
  for (int trial = 0; trial < 50; ++trial) {
    const int d = 1 + trial % 3;
    const auto prob = testing::random_minmax(rng, d, 6);
    const auto a = solve_exact(prob, 99);
    const auto b = solve_exact(prob, 99);
    REQUIRE(a.status == b.status);
    if (a.status == MinMaxStatus::Minimized) {
      CHECK(*a.value == *b.value);
      CHECK(*a.x_star == *b.x_star);
    }

    std::vector<int> perm(6);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    PiecewiseMaxProblem shuffled{Matrix(6, d), Vector(6)};
    for (int i = 0; i < 6; ++i) {
      shuffled.G.row(i) = prob.G.row(perm[static_cast<std::size_t>(i)]);
      shuffled.h(i) = prob.h(perm[static_cast<std::size_t>(i)]);
    }
    const auto c = solve_exact(shuffled, 5);
    REQUIRE(c.status == a.status);
    if (a.status == MinMaxStatus::Minimized) CHECK(std::abs(*c.value - *a.value) <= 1e-12 * (1 + std::abs(*a.value)));
  }
}

TEST_CASE("subgradient backend") {
  auto res = solve_subgradient(vee(0, 0));
  REQUIRE(res.status == MinMaxStatus::Minimized);
  CHECK(*res.value <= 1e-6);

  const auto constant = solve_subgradient({Matrix::Zero(3, 2), Vector{{1, 4, 2}}});
  CHECK(*constant.value == 4.0);
  CHECK(constant.iterations == 0);
  CHECK(constant.converged);

  CHECK(solve_subgradient({Matrix{{1, 0}}, Vector{{0}}}).status == MinMaxStatus::UnboundedBelow);

  testing::Rng rng(53);
  int compared = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const auto prob = testing::random_minmax(rng, 3, 10);
    const auto exact = solve_exact(prob, 0);
    if (exact.status != MinMaxStatus::Minimized) continue;
    const auto approx = solve_subgradient(prob);
    REQUIRE(approx.status == MinMaxStatus::Minimized);
    CHECK(std::abs(*approx.value - *exact.value) <= 1e-5 * (1 + std::abs(*exact.value)));
    ++compared;
  }
  CHECK(compared > 10);
}

TEST_CASE("solve_minmax dispatches") {
  MinMaxOptions opts;
  opts.backend = Backend::Subgradient;
  CHECK(*solve_minmax(vee(-3, -1), opts).value == doctest::Approx(-2.0));
  opts.backend = Backend::Exact;
  CHECK(*solve_minmax(vee(-3, -1), opts).value == doctest::Approx(-2.0));
}
