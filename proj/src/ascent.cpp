#include "qnl/ascent.hpp"

#include <cmath>

namespace qnl {

namespace {

constexpr double kFdStep = 1e-5;
constexpr double kMinStep = 1e-10;

} // namespace

AscentResult adaptive_ascent(std::vector<double>& params,
                             const std::function<double(const std::vector<double>&)>& f,
                             int maxIters, double tol, double step0) {
    const size_t n = params.size();
    AscentResult res;
    res.value = f(params);

    std::vector<double> grad(n);
    std::vector<double> trial(n);
    double step = step0;

    int it = 0;
    for (; it < maxIters; ++it) {
        double gn2 = 0.0;
        for (size_t k = 0; k < n; ++k) {
            trial = params;
            trial[k] += kFdStep;
            const double up = f(trial);
            trial[k] -= 2.0 * kFdStep;
            const double dn = f(trial);
            grad[k] = (up - dn) / (2.0 * kFdStep);
            gn2 += grad[k] * grad[k];
        }
        const double gn = std::sqrt(gn2);
        if (gn < 1e-12) break;

        bool improved = false;
        for (int backtrack = 0; backtrack < 40 && step >= kMinStep; ++backtrack) {
            const double scale = step / gn;
            for (size_t k = 0; k < n; ++k) trial[k] = params[k] + scale * grad[k];
            const double fv = f(trial);
            if (fv > res.value + 1e-15) {
                const double gain = fv - res.value;
                params = trial;
                res.value = fv;
                step *= 1.6;
                improved = true;
                if (gain < tol) it = maxIters; // tail reached; go polish
                break;
            }
            step *= 0.45;
        }
        if (!improved) break;
    }
    res.iterations = it;

    // coordinate parabolic polish
    for (int pass = 0; pass < 2; ++pass) {
        for (size_t k = 0; k < n; ++k) {
            const double h = 1e-4;
            trial = params;
            trial[k] += h;
            const double fp = f(trial);
            trial[k] -= 2.0 * h;
            const double fm = f(trial);
            const double curv = fp - 2.0 * res.value + fm;
            if (curv >= -1e-18) continue;
            double delta = 0.5 * h * (fp - fm) / (-curv);
            delta = std::clamp(delta, -20.0 * h, 20.0 * h);
            trial[k] = params[k] + delta;
            const double fv = f(trial);
            if (fv > res.value) {
                params = trial;
                res.value = fv;
            }
        }
    }
    res.converged = step < 1e-6 || res.iterations >= maxIters;
    return res;
}

} // namespace qnl
