// Dense two-phase simplex. Problem sizes here top out near a hundred rows
// (local polytopes up to 81 vertices), so a tableau with Bland's rule is
// enough.
#pragma once

#include <vector>

namespace qnl {

struct LpConstraint {
    std::vector<double> a;
    char rel; // '<', '=', '>'
    double b;
};

struct LpResult {
    enum class Status { Optimal, Infeasible, Unbounded };
    Status status = Status::Infeasible;
    double objective = 0.0;
    std::vector<double> x;
};

// Minimize c.x subject to the constraints, x >= 0.
LpResult solve_lp(int nvars, const std::vector<LpConstraint>& cons, const std::vector<double>& c);

} // namespace qnl
