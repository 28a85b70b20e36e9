// Derivative-free maximization engine: finite-difference gradient steps with
// an adaptive step length, finished by coordinate-wise parabolic polish.
// Deterministic for a fixed start.
#pragma once

#include <functional>
#include <vector>

namespace qnl {

struct AscentResult {
    double value = -1e300;
    int iterations = 0;
    bool converged = false;
};

AscentResult adaptive_ascent(std::vector<double>& params,
                             const std::function<double(const std::vector<double>&)>& f,
                             int maxIters, double tol, double step0);

} // namespace qnl
