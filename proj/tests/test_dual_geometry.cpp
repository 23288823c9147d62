#include "lpred/dual_geometry.hpp"
#include "lpred/errors.hpp"
#include "support/generators.hpp"

#include <doctest.h>

#include <cmath>
#include <vector>

using namespace lpred;

TEST_CASE("dual_of_point") {
  const Plane pl = dual_of_point(Point{Vector{{2, 3}}});
  CHECK(pl.pi == Vector{{2, 3}});
  CHECK(pl.sigma == -1.0);
  CHECK(dual_of_point(Point{Vector{{0, 1}}}).pi == Vector{{0, 1}});
  CHECK_THROWS_AS(dual_of_point(Point{Vector{{0, 0}}}), GeometryError);
}

TEST_CASE("dual_of_plane") {
  CHECK(dual_of_plane(Plane{Vector{{2, 3}}, -1.0}).coords == Vector{{2, 3}});
  CHECK(dual_of_plane(Plane{Vector{{1, 1}}, 2.0}).coords == Vector{{-0.5, -0.5}});
  CHECK_THROWS_AS(dual_of_plane(Plane{Vector{{1, 0}}, 0.0}), GeometryError);
  CHECK_THROWS_AS(dual_of_plane(Plane{Vector{{1, 0}}, 1e-13}), GeometryError);
}

TEST_CASE("z_intercept") {
  CHECK(z_intercept(dual_of_point(Point{Vector{{1, 4}}})) == doctest::Approx(-0.25));
  CHECK(z_intercept(Plane{Vector{{0, 2}}, 3.0}) == 1.5);
  CHECK_THROWS_AS(z_intercept(Plane{Vector{{1, 0}}, 1.0}), GeometryError);
}

TEST_CASE("side_of") {
  const Plane pl{Vector{{0, 1}}, 2.0};
  CHECK(side_of(pl, Point{Vector{{0, 1}}}) == Side::Negative);
  CHECK(side_of(pl, Point{Vector{{0, 0}}}) == Side::Negative);
  CHECK(side_of(pl, Point{Vector{{0, 3}}}) == Side::Positive);
  CHECK(side_of(Plane{Vector{{1, 1}}, 1.0}, Point{Vector{{0.5, 0.5}}}) == Side::Incident);
  CHECK_THROWS_AS(side_of(pl, Point{Vector{{0, 1, 2}}}), DimensionError);
}

TEST_CASE("same_side_as_origin") {
  const Plane pl{Vector{{0, 1}}, 2.0};
  CHECK(same_side_as_origin(pl, Point{Vector{{0, 1}}}));
  CHECK_FALSE(same_side_as_origin(pl, Point{Vector{{0, 3}}}));
  CHECK_FALSE(same_side_as_origin(pl, Point{Vector{{0, 2}}}));
  CHECK_THROWS_AS(same_side_as_origin(Plane{Vector{{1, 0}}, 0.0}, Point{Vector{{3, 3}}}), GeometryError);
}

TEST_CASE("is_feasible_dual_plane matches direct feasibility") {
  testing::Rng rng(3);
  int agree = 0;
  for (int trial = 0; trial < 50; ++trial) {
    Vector x0;
    LinearProgram lp = testing::planted_lp(rng, 3, 8, &x0);
    lp.b -= lp.A * x0;  // origin strictly interior
    std::vector<Point> duals;
    for (int i = 0; i < lp.num_constraints(); ++i) duals.push_back(Point{-lp.A.row(i).transpose() / lp.b(i)});

    // Strictly interior point: a small multiple of a random direction.
    Vector inside = testing::uniform_vector(rng, 3, -1, 1);
    const double room = (lp.b.array() / (lp.A * inside).array().max(1e-300)).minCoeff();
    inside *= 0.5 * std::min(room, 1.0);
    if (inside.isZero()) continue;
    CHECK(is_feasible_dual_plane(dual_of_point(Point{inside}), duals));

    // Beyond row 0's plane.
    const Vector a0 = lp.A.row(0).transpose();
    const Vector outside = a0 * (2.0 * lp.b(0) / a0.squaredNorm());
    CHECK_FALSE(is_feasible_dual_plane(dual_of_point(Point{outside}), duals));
    ++agree;
  }
  CHECK(agree > 40);
  CHECK_THROWS_AS(is_feasible_dual_plane(Plane{Vector{{0, 1}}, -1.0}, std::vector<Point>{}), InputError);
}

TEST_CASE("involution and incidence on random inputs") {
  testing::Rng rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    const int d = 2 + trial % 5;
    const Vector p = testing::uniform_vector(rng, d, -10, 10);
    CHECK(dual_of_plane(dual_of_point(Point{p})).coords == p);

    Plane pl{testing::uniform_vector(rng, d, -10, 10), testing::uniform(rng, 0.1, 10)};
    // Project p onto the plane, then check the dual incidence residual.
    const Vector on = p - pl.pi * ((pl.pi.dot(p) - pl.sigma) / pl.pi.squaredNorm());
    const Point q = dual_of_plane(pl);
    const Plane on_star = dual_of_point(Point{on});
    const double residual = std::abs(on_star.pi.dot(q.coords) - on_star.sigma) /
                            (1.0 + on.norm() * q.coords.norm());
    CHECK(residual <= 1e-12);
  }
}
