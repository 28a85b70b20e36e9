// Measurements (POVMs) and Haar-random sampling.
#pragma once

#include <vector>

#include "qnl/matrix.hpp"
#include "qnl/rng.hpp"

namespace qnl {

struct Povm {
    int dim = 0;
    std::vector<Matrix> effects;

    Povm() = default;
    Povm(int d, std::vector<Matrix> eff) : dim(d), effects(std::move(eff)) {}

    int outcomes() const { return static_cast<int>(effects.size()); }

    // Each effect PSD within 1e-10 and the effects sum to identity within
    // 1e-10 entrywise.
    void validate() const;
};

// Haar-distributed unitary: QR-style orthonormalization (modified
// Gram-Schmidt, positive-real diagonal) of an iid complex Gaussian matrix.
Matrix haar_unitary(int d, SeededRng& rng);

// Rank-1 projective measurement from the columns of a Haar unitary.
Povm random_projective_povm(int d, SeededRng& rng);

// Random two-outcome projective measurement {P, I-P}; rank of P drawn
// uniformly from 1..d-1.
Povm random_binary_povm(int d, SeededRng& rng);

// Projective qubit measurement along Bloch direction (theta, phi):
// effects (I +- n.sigma)/2.
Povm bloch_povm(double theta, double phi);

// Basis measurement {|k><k| U^dag ...}: effects U|k><k|U^dag.
Povm basis_povm(const Matrix& u);

// Smooth chart on U(d) used by the measurement optimizers: d diagonal phases
// followed by a product of d(d-1)/2 complex Givens rotations; takes exactly
// d*d real parameters.
Matrix unitary_chart(int d, const std::vector<double>& params, int offset = 0);


} // namespace qnl
