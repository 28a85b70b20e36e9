#include "qnl/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qnl {

namespace {

double offdiag_norm(const Matrix& a) {
    double s = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = i + 1; j < a.cols(); ++j) s += std::norm(a(i, j));
    return std::sqrt(2.0 * s);
}

} // namespace

EigResult hermitian_eig(const Matrix& h) {
    require_hermitian(h, 1e-12, "hermitian_eig input");
    const int n = h.rows();
    Matrix a = h;
    // Symmetrize away the sub-1e-12 defect so rotations see an exactly
    // Hermitian matrix.
    for (int i = 0; i < n; ++i) {
        a(i, i) = cplx(a(i, i).real(), 0.0);
        for (int j = i + 1; j < n; ++j) {
            cplx m = 0.5 * (a(i, j) + std::conj(a(j, i)));
            a(i, j) = m;
            a(j, i) = std::conj(m);
        }
    }
    Matrix v = Matrix::identity(n);

    const double scale = std::max(1.0, a.max_abs());
    const double stop = 1e-15 * scale * n;
    const int max_sweeps = 100;

    for (int sweep = 0; sweep < max_sweeps && offdiag_norm(a) > stop; ++sweep) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const cplx apq = a(p, q);
                const double g = std::abs(apq);
                if (g <= 1e-300) continue;
                const double alpha = a(p, p).real();
                const double beta = a(q, q).real();
                const cplx phase = apq / g;
                const double theta = (beta - alpha) / (2.0 * g);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const cplx s = t * c * phase;

                // A <- J^dag A J with J = [[c, s], [-conj(s), c]] on (p, q).
                for (int k = 0; k < n; ++k) {
                    const cplx akp = a(k, p);
                    const cplx akq = a(k, q);
                    a(k, p) = c * akp - std::conj(s) * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const cplx apk = a(p, k);
                    const cplx aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = std::conj(s) * apk + c * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = cplx(a(p, p).real(), 0.0);
                a(q, q) = cplx(a(q, q).real(), 0.0);

                for (int k = 0; k < n; ++k) {
                    const cplx vkp = v(k, p);
                    const cplx vkq = v(k, q);
                    v(k, p) = c * vkp - std::conj(s) * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });

    EigResult res;
    res.values.resize(static_cast<size_t>(n));
    res.vectors = Matrix(n, n);
    for (int k = 0; k < n; ++k) {
        res.values[static_cast<size_t>(k)] = a(order[static_cast<size_t>(k)], order[static_cast<size_t>(k)]).real();
        for (int i = 0; i < n; ++i) res.vectors(i, k) = v(i, order[static_cast<size_t>(k)]);
    }
    return res;
}

Matrix positive_eigenprojector(const Matrix& h, double cut) {
    EigResult e = hermitian_eig(h);
    const int n = h.rows();
    Matrix p(n, n);
    for (int k = 0; k < n; ++k) {
        if (e.values[static_cast<size_t>(k)] <= cut) continue;
        auto col = e.vectors.column(k);
        p += Matrix::projector(col);
    }
    return p;
}

double positive_part_trace(const Matrix& h) {
    EigResult e = hermitian_eig(h);
    double s = 0.0;
    for (double l : e.values)
        if (l > 0.0) s += l;
    return s;
}

Matrix exp_i_hermitian(const Matrix& h, double theta) {
    EigResult e = hermitian_eig(h);
    const int n = h.rows();
    Matrix u(n, n);
    for (int k = 0; k < n; ++k) {
        const cplx ph = std::exp(cplx(0.0, theta * e.values[static_cast<size_t>(k)]));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                u(i, j) += ph * e.vectors(i, k) * std::conj(e.vectors(j, k));
    }
    return u;
}

Matrix hermitian_function(const Matrix& h, double (*f)(double)) {
    EigResult e = hermitian_eig(h);
    const int n = h.rows();
    Matrix r(n, n);
    for (int k = 0; k < n; ++k) {
        const double fv = f(e.values[static_cast<size_t>(k)]);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                r(i, j) += fv * e.vectors(i, k) * std::conj(e.vectors(j, k));
    }
    return r;
}

} // namespace qnl
