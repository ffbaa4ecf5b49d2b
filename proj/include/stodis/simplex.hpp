#pragma once

#include <vector>

#include "stodis/matrix.hpp"

namespace stodis {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    std::vector<double> x;
    double objective = 0.0;
    long iterations = 0;
};

/// Solves  min cᵀx  subject to  a·x = b, x >= 0  with a dense two-phase
/// tableau simplex. Bland's rule keeps it from cycling; an iteration guard
/// backs that up and throws NumericalFailure when exceeded. Dimensions
/// here are tiny (d² variables), so no factorization machinery.
LpResult solve_lp(const Matrix& a, const std::vector<double>& b,
                  const std::vector<double>& c, long max_iterations = 50000);

/// All basic feasible solutions (vertices) of {x : a·x = b, x >= 0},
/// deduplicated in max norm. Exponential in the column count; intended
/// only for the small systems this library builds.
std::vector<std::vector<double>> enumerate_basic_feasible(const Matrix& a,
                                                          const std::vector<double>& b);

}  // namespace stodis
