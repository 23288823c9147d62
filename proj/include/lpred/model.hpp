#pragma once

#include <Eigen/Dense>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lpred {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

enum class Sense { Maximize, Minimize };

/// maximize (or minimize) c·x subject to A x <= b, x in R^d.
///
/// A plain value type: construction does not validate, so arbitrary shapes can
/// be represented and reported on by validate().
struct LinearProgram {
  std::optional<std::string> name;
  int dimension = 0;
  Matrix A;
  Vector b;
  Vector c;
  Sense sense = Sense::Maximize;

  int num_constraints() const { return static_cast<int>(A.rows()); }

  /// The objective as the pipeline maximizes it: c, or -c for minimization.
  Vector max_objective() const { return sense == Sense::Maximize ? c : Vector(-c); }

  friend bool operator==(const LinearProgram&, const LinearProgram&);
};

enum class SolveStatus { Optimal, Unbounded, Infeasible, OriginNotInterior, InputError };

std::string_view to_string(SolveStatus s);
SolveStatus solve_status_from_string(std::string_view s);

struct Solution {
  SolveStatus status = SolveStatus::InputError;
  std::optional<Vector> x;
  std::optional<double> objective;
  std::optional<Vector> interior_point;
  std::optional<double> residual;
  /// Human-readable detail; not serialized.
  std::string message;

  friend bool operator==(const Solution&, const Solution&);
};

enum class Violation {
  DimensionTooSmall,
  NoConstraints,
  DimensionMismatch,
  RhsLengthMismatch,
  ObjectiveLengthMismatch,
  NonFiniteEntry,
};

struct ValidationIssue {
  Violation kind;
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;

  bool ok() const { return issues.empty(); }
  bool has(Violation v) const;
  std::string summary() const;
};

ValidationReport validate(const LinearProgram& lp);

/// Parses the LP JSON format. Throws InputError naming the offending field.
LinearProgram load_lp(std::string_view text);
std::string save_lp(const LinearProgram& lp);

std::string save_solution(const Solution& sol);
Solution load_solution(std::string_view text);

/// max_i (A_i·x - b_i); negative iff x is strictly interior.
double max_residual(const LinearProgram& lp, const Vector& x);

}  // namespace lpred
