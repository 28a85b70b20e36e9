#include "qnl/polytope.hpp"

#include <algorithm>
#include <cmath>

#include "qnl/lp.hpp"

namespace qnl {

std::vector<Vertex> enumerate_deterministic(const Scenario& sc) {
    const std::int64_t count = sc.vertex_count();
    std::vector<Vertex> out;
    out.reserve(static_cast<size_t>(count));
    for (std::int64_t idx = 0; idx < count; ++idx) {
        std::int64_t rem = idx;
        DeterministicStrategy st;
        st.alice.resize(static_cast<size_t>(sc.nX));
        st.bob.resize(static_cast<size_t>(sc.nY));
        for (int x = 0; x < sc.nX; ++x) {
            st.alice[static_cast<size_t>(x)] = static_cast<int>(rem % sc.nA);
            rem /= sc.nA;
        }
        for (int y = 0; y < sc.nY; ++y) {
            st.bob[static_cast<size_t>(y)] = static_cast<int>(rem % sc.nB);
            rem /= sc.nB;
        }
        Box box(sc);
        for (int x = 0; x < sc.nX; ++x)
            for (int y = 0; y < sc.nY; ++y)
                box.at(st.alice[static_cast<size_t>(x)], st.bob[static_cast<size_t>(y)], x, y) = 1.0;
        out.push_back({std::move(st), std::move(box)});
    }
    return out;
}

Box mix_vertices(const Scenario& sc, const std::vector<Vertex>& verts, const LocalModel& model) {
    Box q(sc);
    for (size_t v = 0; v < verts.size(); ++v) {
        const double w = model.weights[v];
        if (w == 0.0) continue;
        for (size_t i = 0; i < q.p.size(); ++i) q.p[i] += w * verts[v].box.p[i];
    }
    return q;
}

Rational local_bound(const BellFunctional& f) {
    const Scenario& sc = f.sc;
    const std::int64_t count = sc.vertex_count();
    bool first = true;
    Rational best;
    std::vector<int> alice(static_cast<size_t>(sc.nX));
    std::vector<int> bob(static_cast<size_t>(sc.nY));
    for (std::int64_t idx = 0; idx < count; ++idx) {
        std::int64_t rem = idx;
        for (int x = 0; x < sc.nX; ++x) {
            alice[static_cast<size_t>(x)] = static_cast<int>(rem % sc.nA);
            rem /= sc.nA;
        }
        for (int y = 0; y < sc.nY; ++y) {
            bob[static_cast<size_t>(y)] = static_cast<int>(rem % sc.nB);
            rem /= sc.nB;
        }
        Rational v(0);
        for (int x = 0; x < sc.nX; ++x)
            for (int y = 0; y < sc.nY; ++y)
                v += f.at(alice[static_cast<size_t>(x)], bob[static_cast<size_t>(y)], x, y);
        if (first || best < v) {
            best = v;
            first = false;
        }
    }
    return best;
}

LocalityVerdict is_local(const Box& box, double tol) {
    const auto verts = enumerate_deterministic(box.sc);
    const int nV = static_cast<int>(verts.size());
    const int nC = box.sc.cells();

    // min t  s.t.  |sum_v w_v P_v - p|_inf <= t,  sum w = 1,  w >= 0
    std::vector<LpConstraint> cons;
    cons.reserve(static_cast<size_t>(2 * nC + 1));
    for (int i = 0; i < nC; ++i) {
        LpConstraint up{std::vector<double>(static_cast<size_t>(nV) + 1, 0.0), '<', box.p[static_cast<size_t>(i)]};
        LpConstraint dn{std::vector<double>(static_cast<size_t>(nV) + 1, 0.0), '<', -box.p[static_cast<size_t>(i)]};
        for (int v = 0; v < nV; ++v) {
            const double a = verts[static_cast<size_t>(v)].box.p[static_cast<size_t>(i)];
            up.a[static_cast<size_t>(v)] = a;
            dn.a[static_cast<size_t>(v)] = -a;
        }
        up.a[static_cast<size_t>(nV)] = -1.0;
        dn.a[static_cast<size_t>(nV)] = -1.0;
        cons.push_back(std::move(up));
        cons.push_back(std::move(dn));
    }
    LpConstraint sum1{std::vector<double>(static_cast<size_t>(nV) + 1, 0.0), '=', 1.0};
    for (int v = 0; v < nV; ++v) sum1.a[static_cast<size_t>(v)] = 1.0;
    cons.push_back(std::move(sum1));

    std::vector<double> cost(static_cast<size_t>(nV) + 1, 0.0);
    cost[static_cast<size_t>(nV)] = 1.0;
    LpResult lp = solve_lp(nV + 1, cons, cost);
    if (lp.status != LpResult::Status::Optimal)
        throw std::runtime_error("is_local: distance LP failed");

    LocalityVerdict verdict;
    verdict.distance = std::max(0.0, lp.objective);
    verdict.local = verdict.distance <= tol;
    if (verdict.local) {
        verdict.model.weights.assign(lp.x.begin(), lp.x.begin() + nV);
        double s = 0.0;
        for (double& w : verdict.model.weights) {
            w = std::max(0.0, w);
            s += w;
        }
        for (double& w : verdict.model.weights) w /= s;
        return verdict;
    }

    // Dual certificate: max phi.p - nu  s.t.  phi.P_v <= nu for all v,
    // |phi|_1 <= 1. Variables phi+, phi-, nu+, nu-.
    const int nPhi = 2 * nC;
    const int nVars = nPhi + 2;
    std::vector<LpConstraint> dcons;
    dcons.reserve(static_cast<size_t>(nV) + 1);
    for (int v = 0; v < nV; ++v) {
        LpConstraint row{std::vector<double>(static_cast<size_t>(nVars), 0.0), '<', 0.0};
        for (int i = 0; i < nC; ++i) {
            const double a = verts[static_cast<size_t>(v)].box.p[static_cast<size_t>(i)];
            row.a[static_cast<size_t>(i)] = a;
            row.a[static_cast<size_t>(nC + i)] = -a;
        }
        row.a[static_cast<size_t>(nPhi)] = -1.0;
        row.a[static_cast<size_t>(nPhi + 1)] = 1.0;
        dcons.push_back(std::move(row));
    }
    LpConstraint norm1{std::vector<double>(static_cast<size_t>(nVars), 1.0), '<', 1.0};
    norm1.a[static_cast<size_t>(nPhi)] = 0.0;
    norm1.a[static_cast<size_t>(nPhi + 1)] = 0.0;
    dcons.push_back(std::move(norm1));

    std::vector<double> dcost(static_cast<size_t>(nVars), 0.0);
    for (int i = 0; i < nC; ++i) {
        dcost[static_cast<size_t>(i)] = -box.p[static_cast<size_t>(i)];
        dcost[static_cast<size_t>(nC + i)] = box.p[static_cast<size_t>(i)];
    }
    dcost[static_cast<size_t>(nPhi)] = 1.0;
    dcost[static_cast<size_t>(nPhi + 1)] = -1.0;
    LpResult dual = solve_lp(nVars, dcons, dcost);
    if (dual.status != LpResult::Status::Optimal)
        throw std::runtime_error("is_local: certificate LP failed");

    verdict.witness.assign(static_cast<size_t>(nC), 0.0);
    for (int i = 0; i < nC; ++i)
        verdict.witness[static_cast<size_t>(i)] =
            dual.x[static_cast<size_t>(i)] - dual.x[static_cast<size_t>(nC + i)];

    verdict.witness_value = 0.0;
    for (int i = 0; i < nC; ++i)
        verdict.witness_value += verdict.witness[static_cast<size_t>(i)] * box.p[static_cast<size_t>(i)];
    double bound = -1e300;
    for (const auto& v : verts) {
        double s = 0.0;
        for (int i = 0; i < nC; ++i) s += verdict.witness[static_cast<size_t>(i)] * v.box.p[static_cast<size_t>(i)];
        bound = std::max(bound, s);
    }
    verdict.witness_local_bound = bound;
    verdict.margin = verdict.witness_value - bound;
    return verdict;
}

} // namespace qnl
