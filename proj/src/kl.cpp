#include "qnl/kl.hpp"

#include <algorithm>
#include <cmath>

namespace qnl {

namespace {

constexpr double kQFloor = 1e-300;
const double kLn2 = std::log(2.0);

} // namespace

KlResult kl_to_local(const Box& box, std::vector<double> inputWeights, double tol, int maxIters) {
    const Scenario& sc = box.sc;
    const int nC = sc.cells();
    if (inputWeights.empty())
        inputWeights.assign(static_cast<size_t>(sc.nX * sc.nY), 1.0 / (sc.nX * sc.nY));
    if (static_cast<int>(inputWeights.size()) != sc.nX * sc.nY)
        throw ScenarioMismatch("kl_to_local: input weight length");

    // per-cell weight w(x,y)
    std::vector<double> w(static_cast<size_t>(nC));
    for (int a = 0; a < sc.nA; ++a)
        for (int b = 0; b < sc.nB; ++b)
            for (int x = 0; x < sc.nX; ++x)
                for (int y = 0; y < sc.nY; ++y)
                    w[static_cast<size_t>(((a * sc.nB + b) * sc.nX + x) * sc.nY + y)] =
                        inputWeights[static_cast<size_t>(x * sc.nY + y)];

    const auto verts = enumerate_deterministic(sc);
    const int nV = static_cast<int>(verts.size());

    KlResult res;
    res.model.weights.assign(static_cast<size_t>(nV), 1.0 / nV);

    std::vector<double> q(static_cast<size_t>(nC));
    auto recompute_q = [&] {
        std::fill(q.begin(), q.end(), 0.0);
        for (int v = 0; v < nV; ++v) {
            const double lv = res.model.weights[static_cast<size_t>(v)];
            if (lv == 0.0) continue;
            const auto& pv = verts[static_cast<size_t>(v)].box.p;
            for (int i = 0; i < nC; ++i) q[static_cast<size_t>(i)] += lv * pv[static_cast<size_t>(i)];
        }
    };

    auto objective = [&] {
        double f = 0.0;
        for (int i = 0; i < nC; ++i) {
            const double pi = box.p[static_cast<size_t>(i)];
            if (pi <= 0.0) continue;
            double qi = q[static_cast<size_t>(i)];
            if (qi < kQFloor) {
                qi = kQFloor;
                res.clamped = true;
            }
            f += w[static_cast<size_t>(i)] * pi * std::log2(pi / qi);
        }
        return f;
    };

    std::vector<double> grad(static_cast<size_t>(nC));
    std::vector<double> dir(static_cast<size_t>(nC));

    recompute_q();
    for (int it = 0; it < maxIters; ++it) {
        res.iterations = it;
        // grad_i = -w_i p_i / (q_i ln 2)
        for (int i = 0; i < nC; ++i) {
            const double pi = box.p[static_cast<size_t>(i)];
            if (pi <= 0.0) {
                grad[static_cast<size_t>(i)] = 0.0;
                continue;
            }
            double qi = q[static_cast<size_t>(i)];
            if (qi < kQFloor) {
                qi = kQFloor;
                res.clamped = true;
            }
            grad[static_cast<size_t>(i)] = -w[static_cast<size_t>(i)] * pi / (qi * kLn2);
        }

        // linear subproblem over vertices + away candidate over the support
        int fwV = -1, awV = -1;
        double fwScore = 1e300, awScore = -1e300;
        for (int v = 0; v < nV; ++v) {
            double s = 0.0;
            const auto& pv = verts[static_cast<size_t>(v)].box.p;
            for (int i = 0; i < nC; ++i)
                if (pv[static_cast<size_t>(i)] != 0.0) s += grad[static_cast<size_t>(i)] * pv[static_cast<size_t>(i)];
            if (s < fwScore) {
                fwScore = s;
                fwV = v;
            }
            if (res.model.weights[static_cast<size_t>(v)] > 0.0 && s > awScore) {
                awScore = s;
                awV = v;
            }
        }
        double gq = 0.0;
        for (int i = 0; i < nC; ++i) gq += grad[static_cast<size_t>(i)] * q[static_cast<size_t>(i)];
        res.gap = gq - fwScore;
        if (res.gap <= tol) {
            res.converged = true;
            break;
        }

        // pick the steeper of the Frank-Wolfe and away directions
        const double fwSlope = fwScore - gq; // < 0
        const double awSlope = gq - awScore; // <= 0
        const bool useAway = awV >= 0 && awSlope < fwSlope;
        double etaMax = 1.0;
        if (useAway) {
            const double la = res.model.weights[static_cast<size_t>(awV)];
            etaMax = la >= 1.0 ? 1e300 : la / (1.0 - la);
            for (int i = 0; i < nC; ++i)
                dir[static_cast<size_t>(i)] =
                    q[static_cast<size_t>(i)] - verts[static_cast<size_t>(awV)].box.p[static_cast<size_t>(i)];
        } else {
            for (int i = 0; i < nC; ++i)
                dir[static_cast<size_t>(i)] =
                    verts[static_cast<size_t>(fwV)].box.p[static_cast<size_t>(i)] - q[static_cast<size_t>(i)];
        }

        // exact line search: phi'(eta) is increasing; bisect on its sign
        auto dphi = [&](double eta) {
            double s = 0.0;
            for (int i = 0; i < nC; ++i) {
                const double pi = box.p[static_cast<size_t>(i)];
                if (pi <= 0.0) continue;
                double qi = q[static_cast<size_t>(i)] + eta * dir[static_cast<size_t>(i)];
                if (qi < kQFloor) qi = kQFloor;
                s -= w[static_cast<size_t>(i)] * pi * dir[static_cast<size_t>(i)] / (qi * kLn2);
            }
            return s;
        };
        double eta = etaMax;
        if (etaMax > 1e200 || dphi(etaMax) > 0.0) {
            double lo = 0.0, hi = std::min(etaMax, 1e3);
            while (dphi(hi) <= 0.0 && hi < etaMax) hi = std::min(etaMax, hi * 4.0);
            for (int b = 0; b < 80; ++b) {
                const double mid = 0.5 * (lo + hi);
                (dphi(mid) <= 0.0 ? lo : hi) = mid;
            }
            eta = lo;
        }
        if (eta <= 0.0) {
            res.converged = res.gap <= tol;
            break;
        }

        auto& lam = res.model.weights;
        if (useAway) {
            for (double& l : lam) l *= (1.0 + eta);
            lam[static_cast<size_t>(awV)] -= eta;
            if (lam[static_cast<size_t>(awV)] < 1e-15) lam[static_cast<size_t>(awV)] = 0.0;
        } else {
            for (double& l : lam) l *= (1.0 - eta);
            lam[static_cast<size_t>(fwV)] += eta;
        }
        recompute_q();
    }

    res.bits = std::max(0.0, objective());
    return res;
}

} // namespace qnl
