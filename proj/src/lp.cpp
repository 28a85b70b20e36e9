#include "qnl/lp.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace qnl {

namespace {

constexpr double kPivotEps = 1e-9;
constexpr double kFeasEps = 1e-7;

struct Tableau {
    int m = 0;     // rows
    int n = 0;     // columns (without rhs)
    int nart0 = 0; // first artificial column
    std::vector<std::vector<double>> t; // m x (n+1), rhs last
    std::vector<int> basis;

    void pivot(int row, int col) {
        const double piv = t[static_cast<size_t>(row)][static_cast<size_t>(col)];
        auto& prow = t[static_cast<size_t>(row)];
        for (double& v : prow) v /= piv;
        for (int i = 0; i < m; ++i) {
            if (i == row) continue;
            auto& r = t[static_cast<size_t>(i)];
            const double f = r[static_cast<size_t>(col)];
            if (std::abs(f) < 1e-14) continue;
            for (int j = 0; j <= n; ++j) r[static_cast<size_t>(j)] -= f * prow[static_cast<size_t>(j)];
        }
        basis[static_cast<size_t>(row)] = col;
    }

    // Minimize cost over the current tableau (Bland's rule). `allowed(j)`
    // masks columns that may enter. Returns false on unboundedness.
    bool run(const std::vector<double>& cost, const std::vector<bool>& allowed) {
        for (;;) {
            // reduced costs r_j = c_j - sum_i c_basis[i] * T[i][j]
            int enter = -1;
            for (int j = 0; j < n; ++j) {
                if (!allowed[static_cast<size_t>(j)]) continue;
                double r = cost[static_cast<size_t>(j)];
                for (int i = 0; i < m; ++i)
                    r -= cost[static_cast<size_t>(basis[static_cast<size_t>(i)])] *
                         t[static_cast<size_t>(i)][static_cast<size_t>(j)];
                if (r < -kPivotEps) { enter = j; break; }
            }
            if (enter < 0) return true;

            int leave = -1;
            double best = std::numeric_limits<double>::infinity();
            for (int i = 0; i < m; ++i) {
                const double aij = t[static_cast<size_t>(i)][static_cast<size_t>(enter)];
                if (aij <= kPivotEps) continue;
                const double ratio = t[static_cast<size_t>(i)][static_cast<size_t>(n)] / aij;
                if (ratio < best - 1e-12 ||
                    (ratio < best + 1e-12 && (leave < 0 || basis[static_cast<size_t>(i)] < basis[static_cast<size_t>(leave)]))) {
                    best = ratio;
                    leave = i;
                }
            }
            if (leave < 0) return false;
            pivot(leave, enter);
        }
    }
};

} // namespace

LpResult solve_lp(int nvars, const std::vector<LpConstraint>& cons, const std::vector<double>& c) {
    const int m = static_cast<int>(cons.size());
    // count slacks and artificials after normalizing rhs >= 0
    int nslack = 0;
    int nart = 0;
    std::vector<int> relNorm(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
        char rel = cons[static_cast<size_t>(i)].rel;
        if (cons[static_cast<size_t>(i)].b < 0.0) rel = (rel == '<') ? '>' : (rel == '>') ? '<' : '=';
        relNorm[static_cast<size_t>(i)] = rel;
        if (rel != '=') ++nslack;
        if (rel != '<') ++nart;
    }

    Tableau tb;
    tb.m = m;
    tb.n = nvars + nslack + nart;
    tb.nart0 = nvars + nslack;
    tb.t.assign(static_cast<size_t>(m), std::vector<double>(static_cast<size_t>(tb.n) + 1, 0.0));
    tb.basis.assign(static_cast<size_t>(m), -1);

    int slack = nvars;
    int art = tb.nart0;
    for (int i = 0; i < m; ++i) {
        const auto& con = cons[static_cast<size_t>(i)];
        if (static_cast<int>(con.a.size()) != nvars) throw std::invalid_argument("solve_lp: row length");
        const double sign = con.b < 0.0 ? -1.0 : 1.0;
        auto& row = tb.t[static_cast<size_t>(i)];
        for (int j = 0; j < nvars; ++j) row[static_cast<size_t>(j)] = sign * con.a[static_cast<size_t>(j)];
        row[static_cast<size_t>(tb.n)] = sign * con.b;
        const char rel = static_cast<char>(relNorm[static_cast<size_t>(i)]);
        if (rel == '<') {
            row[static_cast<size_t>(slack)] = 1.0;
            tb.basis[static_cast<size_t>(i)] = slack++;
        } else if (rel == '>') {
            row[static_cast<size_t>(slack++)] = -1.0;
            row[static_cast<size_t>(art)] = 1.0;
            tb.basis[static_cast<size_t>(i)] = art++;
        } else {
            row[static_cast<size_t>(art)] = 1.0;
            tb.basis[static_cast<size_t>(i)] = art++;
        }
    }

    std::vector<bool> allowAll(static_cast<size_t>(tb.n), true);

    LpResult res;
    if (nart > 0) {
        std::vector<double> c1(static_cast<size_t>(tb.n), 0.0);
        for (int j = tb.nart0; j < tb.n; ++j) c1[static_cast<size_t>(j)] = 1.0;
        if (!tb.run(c1, allowAll)) {
            res.status = LpResult::Status::Unbounded; // cannot happen in phase 1
            return res;
        }
        double phase1 = 0.0;
        for (int i = 0; i < m; ++i)
            if (tb.basis[static_cast<size_t>(i)] >= tb.nart0)
                phase1 += tb.t[static_cast<size_t>(i)][static_cast<size_t>(tb.n)];
        if (phase1 > kFeasEps) {
            res.status = LpResult::Status::Infeasible;
            return res;
        }
        // drive leftover artificials out of the basis where possible
        for (int i = 0; i < m; ++i) {
            if (tb.basis[static_cast<size_t>(i)] < tb.nart0) continue;
            for (int j = 0; j < tb.nart0; ++j) {
                if (std::abs(tb.t[static_cast<size_t>(i)][static_cast<size_t>(j)]) > kPivotEps) {
                    tb.pivot(i, j);
                    break;
                }
            }
        }
    }

    std::vector<double> c2(static_cast<size_t>(tb.n), 0.0);
    for (int j = 0; j < nvars; ++j) c2[static_cast<size_t>(j)] = c[static_cast<size_t>(j)];
    std::vector<bool> allowed(static_cast<size_t>(tb.n), true);
    for (int j = tb.nart0; j < tb.n; ++j) allowed[static_cast<size_t>(j)] = false;
    if (!tb.run(c2, allowed)) {
        res.status = LpResult::Status::Unbounded;
        return res;
    }

    res.status = LpResult::Status::Optimal;
    res.x.assign(static_cast<size_t>(nvars), 0.0);
    for (int i = 0; i < m; ++i) {
        const int b = tb.basis[static_cast<size_t>(i)];
        if (b < nvars) res.x[static_cast<size_t>(b)] = tb.t[static_cast<size_t>(i)][static_cast<size_t>(tb.n)];
    }
    res.objective = 0.0;
    for (int j = 0; j < nvars; ++j) res.objective += c[static_cast<size_t>(j)] * res.x[static_cast<size_t>(j)];
    return res;
}

} // namespace qnl
