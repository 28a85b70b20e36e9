// Kullback-Leibler distance from a box to the local polytope, minimized by
// conditional gradient (Frank-Wolfe with away steps); the linear subproblem
// is exact minimization over deterministic vertices.
#pragma once

#include "qnl/polytope.hpp"

namespace qnl {

struct KlResult {
    double bits = 0.0;  // D(p || q*) in bits
    double gap = 0.0;   // Frank-Wolfe duality gap at termination
    LocalModel model;   // argmin mixture weights
    bool converged = false;
    bool clamped = false; // some q entry hit the 1e-300 floor
    int iterations = 0;
};

// inputWeights is a distribution over (x,y), row-major x*nY+y; empty means
// uniform. Minimizes sum_xy w(x,y) sum_ab p log2(p/q) over local q. Stops at
// duality gap <= tol or maxIters (converged=false, best value kept).
KlResult kl_to_local(const Box& box, std::vector<double> inputWeights, double tol,
                     int maxIters = 200000);

} // namespace qnl
