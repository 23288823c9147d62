#include "lpred/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>

namespace lpred::oracle {

namespace {

constexpr double kSingular = 1e-10;
constexpr double kFeasible = 1e-9;
constexpr double kDuplicate = 1e-7;
constexpr double kRay = 1e-10;

/// Gaussian elimination with partial pivoting. Empty when |det| <= kSingular * scale^n,
/// scale being the largest row norm of the system.
std::optional<Vector> gauss_solve(Matrix m, Vector rhs) {
  const Eigen::Index n = m.rows();
  double scale = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) scale = std::max(scale, m.row(i).norm());
  if (scale == 0.0) return std::nullopt;
  double det = 1.0;
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index piv = col;
    for (Eigen::Index r = col + 1; r < n; ++r)
      if (std::abs(m(r, col)) > std::abs(m(piv, col))) piv = r;
    if (m(piv, col) == 0.0) return std::nullopt;
    if (piv != col) {
      m.row(piv).swap(m.row(col));
      std::swap(rhs(piv), rhs(col));
    }
    det *= m(col, col) / scale;
    for (Eigen::Index r = col + 1; r < n; ++r) {
      const double f = m(r, col) / m(col, col);
      m.row(r).tail(n - col) -= f * m.row(col).tail(n - col);
      rhs(r) -= f * rhs(col);
    }
  }
  if (std::abs(det) <= kSingular) return std::nullopt;
  Vector x(n);
  for (Eigen::Index i = n - 1; i >= 0; --i) {
    double s = rhs(i);
    for (Eigen::Index j = i + 1; j < n; ++j) s -= m(i, j) * x(j);
    x(i) = s / m(i, i);
  }
  return x;
}

template <typename Fn>
void for_each_subset(int n, int k, Fn&& fn) {
  if (k > n) return;
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

bool feasible(const LinearProgram& lp, const Vector& x) {
  for (Eigen::Index i = 0; i < lp.A.rows(); ++i)
    if (lp.A.row(i).dot(x) > lp.b(i) + kFeasible * (1.0 + std::abs(lp.b(i)))) return false;
  return true;
}

/// Orthonormal basis (as rows) of the span of `rows`, by modified Gram-Schmidt.
Matrix row_space_basis(const Matrix& rows) {
  std::vector<Vector> basis;
  for (Eigen::Index i = 0; i < rows.rows(); ++i) {
    Vector v = rows.row(i).transpose();
    const double norm0 = v.norm();
    if (norm0 == 0.0) continue;
    for (const auto& q : basis) v -= q.dot(v) * q;
    for (const auto& q : basis) v -= q.dot(v) * q;
    if (v.norm() > 1e-9 * norm0) basis.push_back(v / v.norm());
  }
  Matrix out(static_cast<Eigen::Index>(basis.size()), rows.cols());
  for (std::size_t i = 0; i < basis.size(); ++i) out.row(static_cast<Eigen::Index>(i)) = basis[i].transpose();
  return out;
}

/// Unit vector spanning the null space of a rank-(d-1) set of d-1 rows, if the rank is full.
std::optional<Vector> null_direction(const Matrix& rows) {
  const Eigen::Index d = rows.cols();
  const Matrix q = row_space_basis(rows);
  if (q.rows() != d - 1) return std::nullopt;
  Vector best;
  double best_norm = 0.0;
  for (Eigen::Index j = 0; j < d; ++j) {
    Vector v = Vector::Unit(d, j);
    for (Eigen::Index r = 0; r < q.rows(); ++r) v -= q.row(r).dot(v) * q.row(r).transpose();
    if (v.norm() > best_norm) {
      best_norm = v.norm();
      best = v;
    }
  }
  return best / best_norm;
}

bool is_improving_ray(const LinearProgram& lp, const Vector& v) {
  if (lp.c.dot(v) <= kRay) return false;
  for (Eigen::Index i = 0; i < lp.A.rows(); ++i)
    if (lp.A.row(i).dot(v) > kRay * (1.0 + lp.A.row(i).norm())) return false;
  return true;
}

Solution make(SolveStatus status) {
  Solution s;
  s.status = status;
  return s;
}

/// Full column rank case: a nonempty feasible set has a vertex.
Solution solve_full_rank(const LinearProgram& lp) {
  const auto vertices = enumerate_vertices(lp);
  if (vertices.empty()) return make(SolveStatus::Infeasible);

  const int n = lp.num_constraints();
  const int d = lp.dimension;
  bool unbounded = false;
  for_each_subset(n, d - 1, [&](const std::vector<int>& rows) {
    if (unbounded) return;
    Matrix sub(d - 1, d);
    for (int r = 0; r < d - 1; ++r) sub.row(r) = lp.A.row(rows[static_cast<std::size_t>(r)]);
    auto v = null_direction(sub);
    if (!v) return;
    if (is_improving_ray(lp, *v) || is_improving_ray(lp, -*v)) unbounded = true;
  });
  if (unbounded) return make(SolveStatus::Unbounded);

  const Vertex* best = &vertices.front();
  for (const auto& v : vertices)
    if (lp.c.dot(v.x) > lp.c.dot(best->x)) best = &v;
  Solution s = make(SolveStatus::Optimal);
  s.x = best->x;
  s.objective = lp.c.dot(best->x);
  s.residual = (lp.A * best->x - lp.b).maxCoeff();
  return s;
}

}  // namespace

std::vector<Vertex> enumerate_vertices(const LinearProgram& lp) {
  std::vector<Vertex> out;
  const int n = lp.num_constraints();
  const int d = static_cast<int>(lp.A.cols());
  if (d == 0 || n < d) return out;
  for_each_subset(n, d, [&](const std::vector<int>& rows) {
    Matrix sub(d, d);
    Vector rhs(d);
    for (int r = 0; r < d; ++r) {
      sub.row(r) = lp.A.row(rows[static_cast<std::size_t>(r)]);
      rhs(r) = lp.b(rows[static_cast<std::size_t>(r)]);
    }
    auto x = gauss_solve(sub, rhs);
    if (!x || !feasible(lp, *x)) return;
    for (const auto& v : out)
      if ((v.x - *x).norm() < kDuplicate) return;
    out.push_back({*x, rows});
  });
  return out;
}

Solution oracle_solve(const LinearProgram& lp) {
  LinearProgram work = lp;
  work.c = lp.max_objective();
  work.sense = Sense::Maximize;

  const Matrix basis = row_space_basis(work.A);
  const auto rank = basis.rows();
  const int d = work.dimension;
  Solution s;
  if (rank == d) {
    s = solve_full_rank(work);
  } else {
    // x = Q^T y + (null-space part); constraints only see y.
    const Vector c_row = basis * work.c;
    const Vector c_null = work.c - basis.transpose() * c_row;
    bool feasible_set = false;
    std::optional<Vector> y_opt;
    if (rank == 0) {
      feasible_set = (work.b.array() >= -kFeasible).all();
      y_opt = Vector(0);
    } else {
      LinearProgram reduced;
      reduced.dimension = static_cast<int>(rank);
      reduced.A = work.A * basis.transpose();
      reduced.b = work.b;
      reduced.c = c_row;
      reduced.sense = Sense::Maximize;
      const Solution inner = solve_full_rank(reduced);
      feasible_set = inner.status != SolveStatus::Infeasible;
      if (inner.status == SolveStatus::Unbounded) return make(SolveStatus::Unbounded);
      if (inner.status == SolveStatus::Optimal) y_opt = *inner.x;
    }
    if (!feasible_set) return make(SolveStatus::Infeasible);
    if (c_null.norm() > kRay) return make(SolveStatus::Unbounded);
    s = make(SolveStatus::Optimal);
    s.x = basis.transpose() * *y_opt;
    s.residual = (work.A * *s.x - work.b).maxCoeff();
  }
  if (s.status == SolveStatus::Optimal) s.objective = lp.c.dot(*s.x);
  return s;
}

}  // namespace lpred::oracle
