// Spectral kernel: cyclic Jacobi rotations for Hermitian matrices. Robust at
// the dimensions this toolkit ever sees (<= ~36); feeds entropy, Schmidt
// structure, measurement updates and matrix functions.
#pragma once

#include <vector>

#include "qnl/matrix.hpp"

namespace qnl {

struct EigResult {
    std::vector<double> values; // ascending
    Matrix vectors;             // orthonormal columns, vectors.column(k) <-> values[k]
};

// Throws NotHermitian when the input fails the 1e-12 Hermiticity check.
EigResult hermitian_eig(const Matrix& h);

// Projector onto the strictly positive eigenspace of a Hermitian operator.
Matrix positive_eigenprojector(const Matrix& h, double cut = 0.0);

// Sum of positive eigenvalues (= max_{0<=E<=I} Tr[E h]).
double positive_part_trace(const Matrix& h);

// exp(i*theta*H) for Hermitian H.
Matrix exp_i_hermitian(const Matrix& h, double theta = 1.0);

// V f(lambda) V^dag with f applied to eigenvalues.
Matrix hermitian_function(const Matrix& h, double (*f)(double));

} // namespace qnl
