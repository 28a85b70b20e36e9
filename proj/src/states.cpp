#include "qnl/states.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qnl {

PureState::PureState(int da, int db, std::vector<cplx> amplitudes)
    : dA(da), dB(db), amp(std::move(amplitudes)) {
    if (dA <= 0 || dB <= 0 || amp.size() != static_cast<size_t>(dA) * dB)
        throw InvalidDims("PureState: amplitude length must be dA*dB");
}

double PureState::norm_defect() const {
    double s = 0.0;
    for (const auto& a : amp) s += std::norm(a);
    return std::abs(s - 1.0);
}

Matrix PureState::density() const {
    return Matrix::projector(amp);
}

DensityOperator::DensityOperator(int da, int db, Matrix m) : dA(da), dB(db), rho(std::move(m)) {
    if (dA <= 0 || dB <= 0 || rho.rows() != dA * dB || rho.cols() != dA * dB)
        throw InvalidDims("DensityOperator: matrix must be (dA*dB) square");
}

void DensityOperator::validate() const {
    require_hermitian(rho, 1e-12, "density operator");
    if (std::abs(rho.trace().real() - 1.0) > 1e-10)
        throw InvalidDims("DensityOperator: trace != 1");
    auto e = hermitian_eig(rho);
    if (e.values.front() < -1e-10)
        throw InvalidDims("DensityOperator: negative eigenvalue");
}

DensityOperator density_from_pure(const PureState& psi) {
    return DensityOperator(psi.dA, psi.dB, psi.density());
}

Matrix partial_trace_kron(const Matrix& m, int dLeft, int dRight, Party keep) {
    if (m.rows() != dLeft * dRight || m.cols() != dLeft * dRight)
        throw InvalidDims("partial_trace: dims do not match matrix size");
    if (keep == Party::A) {
        Matrix r(dLeft, dLeft);
        for (int i = 0; i < dLeft; ++i)
            for (int k = 0; k < dLeft; ++k) {
                cplx s = 0.0;
                for (int j = 0; j < dRight; ++j) s += m(i * dRight + j, k * dRight + j);
                r(i, k) = s;
            }
        return r;
    }
    Matrix r(dRight, dRight);
    for (int j = 0; j < dRight; ++j)
        for (int l = 0; l < dRight; ++l) {
            cplx s = 0.0;
            for (int i = 0; i < dLeft; ++i) s += m(i * dRight + j, i * dRight + l);
            r(j, l) = s;
        }
    return r;
}

Matrix partial_trace(const DensityOperator& rho, Party keep) {
    return partial_trace_kron(rho.rho, rho.dA, rho.dB, keep);
}

SchmidtDecomposition schmidt_decompose(const PureState& psi) {
    // Eigen-decompose rho_A = M M^dag where M_ij = amp[i*dB+j]; the B basis
    // follows through M^dag on the nonzero-coefficient columns, completed by
    // Gram-Schmidt elsewhere.
    const int dA = psi.dA;
    const int dB = psi.dB;
    Matrix m(dA, dB);
    for (int i = 0; i < dA; ++i)
        for (int j = 0; j < dB; ++j) m(i, j) = psi.amp[static_cast<size_t>(i) * dB + j];

    Matrix rhoA = m * m.adjoint();
    for (int i = 0; i < dA; ++i) rhoA(i, i) = cplx(rhoA(i, i).real(), 0.0);
    EigResult e = hermitian_eig(rhoA);

    const int r = std::min(dA, dB);
    SchmidtDecomposition out;
    out.coefficients.resize(static_cast<size_t>(r));
    out.basisA = Matrix(dA, r);
    out.basisB = Matrix(dB, r);

    // eigenvalues ascending; take the top r in descending order
    for (int k = 0; k < r; ++k) {
        const int src = dA - 1 - k;
        const double lam = std::max(0.0, e.values[static_cast<size_t>(src)]);
        out.coefficients[static_cast<size_t>(k)] = std::sqrt(lam);
        for (int i = 0; i < dA; ++i) out.basisA(i, k) = e.vectors(i, src);
    }

    Matrix mdag = m.adjoint();
    for (int k = 0; k < r; ++k) {
        const double c = out.coefficients[static_cast<size_t>(k)];
        std::vector<cplx> b(static_cast<size_t>(dB));
        if (c > 1e-12) {
            auto acol = out.basisA.column(k);
            b = mdag.apply(acol);
            for (auto& v : b) v /= c;
        } else {
            // complete orthonormally against earlier B columns
            for (int trial = 0; trial < dB; ++trial) {
                std::fill(b.begin(), b.end(), cplx{});
                b[static_cast<size_t>(trial)] = 1.0;
                for (int kk = 0; kk < k; ++kk) {
                    cplx ov = 0.0;
                    for (int j = 0; j < dB; ++j) ov += std::conj(out.basisB(j, kk)) * b[static_cast<size_t>(j)];
                    for (int j = 0; j < dB; ++j) b[static_cast<size_t>(j)] -= ov * out.basisB(j, kk);
                }
                double n2 = 0.0;
                for (const auto& v : b) n2 += std::norm(v);
                if (n2 > 0.5) {
                    for (auto& v : b) v /= std::sqrt(n2);
                    break;
                }
            }
        }
        for (int j = 0; j < dB; ++j) out.basisB(j, k) = b[static_cast<size_t>(j)];
    }
    return out;
}

double entropy_bits(const std::vector<double>& probs) {
    double s = 0.0;
    for (double p : probs)
        if (p > 0.0) s -= p * std::log2(p);
    return s;
}

double entanglement_entropy(const PureState& psi) {
    auto sd = schmidt_decompose(psi);
    std::vector<double> probs(sd.coefficients.size());
    for (size_t k = 0; k < probs.size(); ++k) probs[k] = sd.coefficients[k] * sd.coefficients[k];
    return entropy_bits(probs);
}

PureState schmidt_state(const std::vector<double>& coefficients, int dA, int dB) {
    const int n = static_cast<int>(coefficients.size());
    if (dA == 0) dA = n;
    if (dB == 0) dB = n;
    if (n > std::min(dA, dB)) throw InvalidDims("schmidt_state: more coefficients than min(dA,dB)");
    double n2 = 0.0;
    for (double c : coefficients) {
        if (c < 0.0) throw DegenerateState("schmidt_state: negative coefficient");
        n2 += c * c;
    }
    if (n2 <= 0.0) throw DegenerateState("schmidt_state: all-zero coefficients");
    std::vector<cplx> amp(static_cast<size_t>(dA) * dB);
    for (int k = 0; k < n; ++k)
        amp[static_cast<size_t>(k) * dB + k] = coefficients[static_cast<size_t>(k)] / std::sqrt(n2);
    return PureState(dA, dB, std::move(amp));
}

PureState max_entangled(int n) {
    return schmidt_state(std::vector<double>(static_cast<size_t>(n), 1.0));
}

PureState two_qubit_schmidt(double theta) {
    return schmidt_state({std::cos(theta), std::sin(theta)});
}

std::vector<PureTerm> rank_factorization(const DensityOperator& rho) {
    auto e = hermitian_eig(rho.rho);
    std::vector<PureTerm> terms;
    for (int k = 0; k < rho.dA * rho.dB; ++k) {
        const double w = e.values[static_cast<size_t>(k)];
        if (w < 1e-14) continue;
        Matrix m(rho.dA, rho.dB);
        for (int i = 0; i < rho.dA; ++i)
            for (int j = 0; j < rho.dB; ++j) m(i, j) = e.vectors(i * rho.dB + j, k);
        terms.push_back({w, std::move(m)});
    }
    return terms;
}

DensityOperator werner_state(double p) {
    Matrix phi = max_entangled(2).density();
    Matrix rho = phi * p + Matrix::identity(4) * ((1.0 - p) / 4.0);
    return DensityOperator(2, 2, rho);
}

} // namespace qnl
