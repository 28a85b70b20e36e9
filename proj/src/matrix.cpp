#include "qnl/matrix.hpp"

#include <algorithm>
#include <cmath>

namespace qnl {

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::outer(const std::vector<cplx>& v, const std::vector<cplx>& w) {
    Matrix m(static_cast<int>(v.size()), static_cast<int>(w.size()));
    for (size_t i = 0; i < v.size(); ++i)
        for (size_t j = 0; j < w.size(); ++j)
            m(static_cast<int>(i), static_cast<int>(j)) = v[i] * std::conj(w[j]);
    return m;
}

Matrix Matrix::diag(const std::vector<double>& d) {
    Matrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (size_t i = 0; i < d.size(); ++i) m(static_cast<int>(i), static_cast<int>(i)) = d[i];
    return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidDims("matrix add shape mismatch");
    Matrix r = *this;
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] += o.a_[k];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidDims("matrix sub shape mismatch");
    Matrix r = *this;
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] -= o.a_[k];
    return r;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidDims("matrix add shape mismatch");
    for (size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidDims("matrix sub shape mismatch");
    for (size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw InvalidDims("matrix mul shape mismatch");
    Matrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            const cplx aik = (*this)(i, k);
            if (aik == cplx{}) continue;
            for (int j = 0; j < o.cols_; ++j) r(i, j) += aik * o(k, j);
        }
    }
    return r;
}

Matrix Matrix::operator*(cplx s) const {
    Matrix r = *this;
    for (auto& v : r.a_) v *= s;
    return r;
}

Matrix Matrix::adjoint() const {
    Matrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r(j, i) = std::conj((*this)(i, j));
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

Matrix Matrix::conj() const {
    Matrix r = *this;
    for (auto& v : r.a_) v = std::conj(v);
    return r;
}

cplx Matrix::trace() const {
    cplx t = 0.0;
    for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
}

double Matrix::max_abs() const {
    double m = 0.0;
    for (const auto& v : a_) m = std::max(m, std::abs(v));
    return m;
}

double Matrix::fro_norm() const {
    double s = 0.0;
    for (const auto& v : a_) s += std::norm(v);
    return std::sqrt(s);
}

std::vector<cplx> Matrix::column(int j) const {
    std::vector<cplx> c(static_cast<size_t>(rows_));
    for (int i = 0; i < rows_; ++i) c[static_cast<size_t>(i)] = (*this)(i, j);
    return c;
}

std::vector<cplx> Matrix::apply(const std::vector<cplx>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw InvalidDims("matrix apply shape mismatch");
    std::vector<cplx> r(static_cast<size_t>(rows_));
    for (int i = 0; i < rows_; ++i) {
        cplx s = 0.0;
        for (int j = 0; j < cols_; ++j) s += (*this)(i, j) * v[static_cast<size_t>(j)];
        r[static_cast<size_t>(i)] = s;
    }
    return r;
}

double Matrix::hermiticity_defect() const {
    if (!square()) return 1.0 / 0.0;
    double m = 0.0;
    for (int i = 0; i < rows_; ++i)
        for (int j = i; j < cols_; ++j)
            m = std::max(m, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return m;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            const cplx aij = a(i, j);
            if (aij == cplx{}) continue;
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l)
                    r(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return r;
}

double trace_product_real(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows() || a.rows() != b.cols()) throw InvalidDims("trace product shape mismatch");
    double s = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            const cplx& x = a(i, j);
            const cplx& y = b(j, i);
            s += x.real() * y.real() - x.imag() * y.imag();
        }
    return s;
}

void require_hermitian(const Matrix& m, double tol, const char* who) {
    if (!m.square()) throw NotHermitian(std::string(who) + " is not square");
    if (m.hermiticity_defect() > tol) throw NotHermitian(std::string(who) + " fails Hermiticity check");
}

Matrix pauli_x() {
    Matrix m(2, 2);
    m(0, 1) = 1.0;
    m(1, 0) = 1.0;
    return m;
}

Matrix pauli_y() {
    Matrix m(2, 2);
    m(0, 1) = cplx(0.0, -1.0);
    m(1, 0) = cplx(0.0, 1.0);
    return m;
}

Matrix pauli_z() {
    Matrix m(2, 2);
    m(0, 0) = 1.0;
    m(1, 1) = -1.0;
    return m;
}

} // namespace qnl
