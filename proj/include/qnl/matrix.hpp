// Dense complex matrix kernel. Dimensions in this toolkit stay small (two
// qutrits plus qutrit-sized inputs, i.e. <= ~81), so everything is plain
// row-major storage with naive O(n^3) products.
#pragma once

#include <complex>
#include <vector>

#include "qnl/errors.hpp"

namespace qnl {

using cplx = std::complex<double>;

class Matrix {
  public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static Matrix identity(int n);
    static Matrix zero(int n) { return Matrix(n, n); }
    // |v><w|
    static Matrix outer(const std::vector<cplx>& v, const std::vector<cplx>& w);
    static Matrix projector(const std::vector<cplx>& v) { return outer(v, v); }
    static Matrix diag(const std::vector<double>& d);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    cplx& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const cplx& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator*(cplx s) const;
    Matrix operator*(double s) const { return *this * cplx(s, 0.0); }
    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);

    Matrix adjoint() const;
    Matrix transpose() const;
    Matrix conj() const;

    cplx trace() const;
    double max_abs() const;
    double fro_norm() const;

    std::vector<cplx> column(int j) const;
    std::vector<cplx> apply(const std::vector<cplx>& v) const;

    // max_ij |A_ij - conj(A_ji)|
    double hermiticity_defect() const;
    bool is_hermitian(double tol = 1e-12) const { return hermiticity_defect() <= tol; }

    const std::vector<cplx>& data() const { return a_; }
    std::vector<cplx>& data() { return a_; }

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<cplx> a_;
};

// Kronecker product; the left factor indexes the coarse blocks.
Matrix kron(const Matrix& a, const Matrix& b);

// Re Tr[A*B] for Hermitian A, B (exact real part of the trace inner product).
double trace_product_real(const Matrix& a, const Matrix& b);

// Throws NotHermitian when the defect exceeds tol.
void require_hermitian(const Matrix& m, double tol = 1e-12, const char* who = "operator");

// Pauli matrices and friends.
Matrix pauli_x();
Matrix pauli_y();
Matrix pauli_z();

} // namespace qnl
