#include "lpred/transforms.hpp"

#include "lpred/errors.hpp"

#include <cmath>

namespace lpred {

namespace {

constexpr double kVanishingAxis = 1e-14;

void require_length(Eigen::Index got, Eigen::Index want, const char* what) {
  if (got != want)
    throw DimensionError(std::string(what) + " has length " + std::to_string(got) + ", expected " +
                         std::to_string(want));
}

}  // namespace

std::pair<LinearProgram, Translation> make_origin_strictly_feasible(const LinearProgram& lp,
                                                                     const Vector& p0) {
  require_length(p0.size(), lp.A.cols(), "interior point");
  const Vector shifted = lp.b - lp.A * p0;
  for (Eigen::Index i = 0; i < shifted.size(); ++i) {
    if (!(shifted(i) > 0.0))
      throw NotInteriorError("point is not strictly interior: row " + std::to_string(i) +
                             " has slack " + std::to_string(shifted(i)));
  }
  LinearProgram out = lp;
  out.b = shifted;
  return {std::move(out), Translation{p0}};
}

HouseholderRotation rotation_to_last_axis(const Vector& c) {
  const auto d = c.size();
  if (d < 2) throw DimensionError("rotation needs at least two coordinates");
  const double norm = c.norm();
  if (norm == 0.0 || !std::isfinite(norm)) throw GeometryError("objective vector is zero");

  Vector u = c / norm;
  u(d - 1) -= 1.0;
  const double unorm = u.norm();
  HouseholderRotation rot;
  rot.dimension = static_cast<int>(d);
  if (unorm < kVanishingAxis) return rot;
  rot.u_hat = u / unorm;
  rot.negate_first_row = true;
  return rot;
}

Vector apply_rotation(const HouseholderRotation& rot, const Vector& v, bool inverse) {
  require_length(v.size(), rot.dimension, "vector");
  Vector out = v;
  // R = D H and R^T = H D, with H symmetric.
  if (inverse && rot.negate_first_row) out(0) = -out(0);
  if (rot.u_hat) out -= (2.0 * rot.u_hat->dot(out)) * *rot.u_hat;
  if (!inverse && rot.negate_first_row) out(0) = -out(0);
  return out;
}

Matrix HouseholderRotation::matrix() const {
  Matrix r(dimension, dimension);
  for (int j = 0; j < dimension; ++j) r.col(j) = apply_rotation(*this, Vector::Unit(dimension, j));
  return r;
}

LinearProgram rotate_problem(const LinearProgram& lp, const HouseholderRotation& rot) {
  require_length(lp.A.cols(), rot.dimension, "constraint rows");
  require_length(lp.c.size(), rot.dimension, "objective");
  LinearProgram out = lp;
  for (Eigen::Index i = 0; i < lp.A.rows(); ++i)
    out.A.row(i) = apply_rotation(rot, lp.A.row(i).transpose()).transpose();
  out.c = Vector::Unit(rot.dimension, rot.dimension - 1) * lp.c.norm();
  return out;
}

Vector recover_solution(const ProblemTransform& t, const Vector& y) {
  require_length(t.translation.p0.size(), t.rotation.dimension, "translation");
  return apply_rotation(t.rotation, y, /*inverse=*/true) + t.translation.p0;
}

Vector forward_transform(const ProblemTransform& t, const Vector& x) {
  require_length(x.size(), t.translation.p0.size(), "point");
  return apply_rotation(t.rotation, x - t.translation.p0);
}

}  // namespace lpred
