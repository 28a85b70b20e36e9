#include "qnl/povm.hpp"

#include <cmath>

#include "qnl/eig.hpp"

namespace qnl {

void Povm::validate() const {
    if (effects.empty()) throw InvalidDims("Povm: no effects");
    Matrix sum(dim, dim);
    for (const auto& e : effects) {
        if (e.rows() != dim || e.cols() != dim) throw InvalidDims("Povm: effect dim mismatch");
        require_hermitian(e, 1e-10, "POVM effect");
        auto ev = hermitian_eig(e);
        if (ev.values.front() < -1e-10) throw InvalidDims("Povm: effect not PSD");
        sum += e;
    }
    if ((sum - Matrix::identity(dim)).max_abs() > 1e-10)
        throw InvalidDims("Povm: effects do not sum to identity");
}

Matrix haar_unitary(int d, SeededRng& rng) {
    Matrix g(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            auto [re, im] = rng.next_gaussian_pair();
            g(i, j) = cplx(re, im);
        }
    // modified Gram-Schmidt with a second orthogonalization pass; the
    // positive-real column norms fix the diagonal phases, which makes the
    // resulting Q Haar-distributed
    Matrix q(d, d);
    for (int j = 0; j < d; ++j) {
        std::vector<cplx> v = g.column(j);
        for (int pass = 0; pass < 2; ++pass) {
            for (int k = 0; k < j; ++k) {
                cplx ov = 0.0;
                for (int i = 0; i < d; ++i) ov += std::conj(q(i, k)) * v[static_cast<size_t>(i)];
                for (int i = 0; i < d; ++i) v[static_cast<size_t>(i)] -= ov * q(i, k);
            }
        }
        double n2 = 0.0;
        for (const auto& x : v) n2 += std::norm(x);
        const double inv = 1.0 / std::sqrt(n2);
        for (int i = 0; i < d; ++i) q(i, j) = v[static_cast<size_t>(i)] * inv;
    }
    return q;
}

Povm basis_povm(const Matrix& u) {
    const int d = u.rows();
    std::vector<Matrix> eff;
    eff.reserve(static_cast<size_t>(d));
    for (int k = 0; k < d; ++k) eff.push_back(Matrix::projector(u.column(k)));
    return Povm(d, std::move(eff));
}

Povm random_projective_povm(int d, SeededRng& rng) {
    return basis_povm(haar_unitary(d, rng));
}

Povm random_binary_povm(int d, SeededRng& rng) {
    Matrix u = haar_unitary(d, rng);
    const int rank = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(d - 1)));
    Matrix p(d, d);
    for (int k = 0; k < rank; ++k) p += Matrix::projector(u.column(k));
    Matrix q = Matrix::identity(d) - p;
    return Povm(d, {std::move(p), std::move(q)});
}

Matrix unitary_chart(int d, const std::vector<double>& params, int offset) {
    if (static_cast<int>(params.size()) < offset + d * d)
        throw InvalidDims("unitary_chart: needs d*d parameters");
    int idx = offset;
    Matrix u(d, d);
    for (int k = 0; k < d; ++k) u(k, k) = std::exp(cplx(0.0, params[static_cast<size_t>(idx++)]));
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            const double th = params[static_cast<size_t>(idx++)];
            const double ph = params[static_cast<size_t>(idx++)];
            const double c = std::cos(th);
            const cplx s = std::sin(th) * std::exp(cplx(0.0, ph));
            // right-multiply by the Givens rotation acting on columns (i, j)
            for (int r = 0; r < d; ++r) {
                const cplx ui = u(r, i);
                const cplx uj = u(r, j);
                u(r, i) = c * ui - std::conj(s) * uj;
                u(r, j) = s * ui + c * uj;
            }
        }
    return u;
}

Povm bloch_povm(double theta, double phi) {
    const double nx = std::sin(theta) * std::cos(phi);
    const double ny = std::sin(theta) * std::sin(phi);
    const double nz = std::cos(theta);
    Matrix ns = pauli_x() * nx + pauli_y() * ny + pauli_z() * nz;
    Matrix e0 = (Matrix::identity(2) + ns) * 0.5;
    Matrix e1 = (Matrix::identity(2) - ns) * 0.5;
    return Povm(2, {std::move(e0), std::move(e1)});
}

} // namespace qnl
