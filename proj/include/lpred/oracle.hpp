#pragma once

#include "lpred/model.hpp"

#include <vector>

namespace lpred::oracle {

/// Reference solver by exhaustive enumeration. Exponential in d; test use only.
/// Shares no arithmetic with the reduction pipeline.

struct Vertex {
  Vector x;
  std::vector<int> active_rows;
};

/// Every basic feasible point: each d-subset of rows with a nonsingular subsystem, solved
/// and kept when A x <= b + 1e-9 (1 + |b_i|). Points within 1e-7 of an earlier one are dropped.
std::vector<Vertex> enumerate_vertices(const LinearProgram& lp);

/// Optimal / Unbounded / Infeasible by vertex enumeration plus a recession-ray search.
/// Rank-deficient A is handled by solving in the row space of A.
Solution oracle_solve(const LinearProgram& lp);

}  // namespace lpred::oracle
