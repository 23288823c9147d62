#pragma once

#include "lpred/model.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace lpred::detail {

/// minimize c·y  s.t.  rows(i)·y <= rhs(i),  -box <= y_j <= box.
///
/// Seidel's randomized incremental algorithm. Rows are inserted in `order`; the box keeps
/// every intermediate problem bounded, so the answer is always a vertex of the boxed region
/// (or nullopt when the rows are infeasible inside the box). Ties in the objective resolve
/// toward the lower end of each coordinate.
std::optional<Vector> boxed_lp_minimize(const Matrix& rows, const Vector& rhs, const Vector& c,
                                        double box, const std::vector<int>& order);

/// Fisher-Yates over 0..n-1 driven by mt19937_64, so permutations are identical on every
/// platform for a given seed.
std::vector<int> random_order(int n, std::mt19937_64& rng);

}  // namespace lpred::detail
