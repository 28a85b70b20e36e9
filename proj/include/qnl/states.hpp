// Bipartite pure and mixed states, Schmidt structure, entanglement entropy.
#pragma once

#include <vector>

#include "qnl/eig.hpp"
#include "qnl/matrix.hpp"

namespace qnl {

enum class Party { A, B };

struct PureState {
    int dA = 0;
    int dB = 0;
    std::vector<cplx> amp; // length dA*dB, index i*dB + j

    PureState() = default;
    PureState(int da, int db, std::vector<cplx> amplitudes);

    double norm_defect() const; // | sum |amp|^2 - 1 |
    Matrix density() const;     // |psi><psi| on dA*dB
};

struct DensityOperator {
    int dA = 0;
    int dB = 0;
    Matrix rho; // (dA*dB) x (dA*dB)

    DensityOperator() = default;
    DensityOperator(int da, int db, Matrix m);

    // Full invariant check: Hermitian (1e-12), trace 1 (1e-10), min
    // eigenvalue >= -1e-10. Used on external input; internal constructions
    // are validated in tests instead.
    void validate() const;
};

DensityOperator density_from_pure(const PureState& psi);

// Reduced operator on the kept party. Throws InvalidDims when dims do not
// match the matrix size.
Matrix partial_trace(const DensityOperator& rho, Party keep);
Matrix partial_trace_kron(const Matrix& m, int dLeft, int dRight, Party keep);

struct SchmidtDecomposition {
    std::vector<double> coefficients; // nonincreasing, sum of squares = 1
    Matrix basisA;                    // dA x r, orthonormal columns
    Matrix basisB;                    // dB x r
};

SchmidtDecomposition schmidt_decompose(const PureState& psi);

// Entropy of entanglement in bits: -sum c^2 log2 c^2 with 0 log 0 = 0.
double entanglement_entropy(const PureState& psi);
double entropy_bits(const std::vector<double>& probs);

// State with the given Schmidt coefficients on the computational diagonal;
// coefficients are normalized internally. All-zero input throws
// DegenerateState.
PureState schmidt_state(const std::vector<double>& coefficients, int dA = 0, int dB = 0);
PureState max_entangled(int n);

// cos(theta)|00> + sin(theta)|11>
PureState two_qubit_schmidt(double theta);

// Spectral pure-state terms of a density operator: rho = sum_k w_k |m_k><m_k|
// with each |m_k> reshaped to a dA x dB amplitude matrix. Terms below 1e-14
// weight are dropped.
struct PureTerm {
    double weight;
    Matrix m;
};
std::vector<PureTerm> rank_factorization(const DensityOperator& rho);

// p |phi+><phi+| + (1-p) I/4
DensityOperator werner_state(double p);

} // namespace qnl
