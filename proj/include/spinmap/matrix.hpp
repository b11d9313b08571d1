#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <initializer_list>
#include <vector>

#include "spinmap/errors.hpp"

namespace spinmap {

using cplx = std::complex<double>;

/// Small dense complex matrix, row-major. Sized for n <= 16; everything
/// downstream is 4x4.
class Matrix {
  public:
    Matrix() : dim_(0) {}

    explicit Matrix(int dim) : dim_(dim), a_(static_cast<std::size_t>(dim) * dim) {
        if (dim < 1) throw validation_error("Matrix: dimension must be positive");
    }

    Matrix(int dim, std::initializer_list<cplx> entries) : Matrix(dim) {
        if (static_cast<int>(entries.size()) != dim * dim)
            throw validation_error("Matrix: initializer size does not match dimension");
        std::copy(entries.begin(), entries.end(), a_.begin());
    }

    int dim() const { return dim_; }

    cplx& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * dim_ + j]; }
    const cplx& operator()(int i, int j) const {
        return a_[static_cast<std::size_t>(i) * dim_ + j];
    }

    static Matrix identity(int dim) {
        Matrix m(dim);
        for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
        return m;
    }

    static Matrix diagonal(const std::vector<double>& d) {
        Matrix m(static_cast<int>(d.size()));
        for (int i = 0; i < m.dim(); ++i) m(i, i) = d[static_cast<std::size_t>(i)];
        return m;
    }

    Matrix adjoint() const {
        Matrix r(dim_);
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j) r(j, i) = std::conj((*this)(i, j));
        return r;
    }

    Matrix conjugate() const {
        Matrix r(dim_);
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j) r(i, j) = std::conj((*this)(i, j));
        return r;
    }

    Matrix& operator+=(const Matrix& o) {
        check_same_dim(o);
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
        return *this;
    }

    Matrix& operator-=(const Matrix& o) {
        check_same_dim(o);
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
        return *this;
    }

    Matrix& operator*=(cplx s) {
        for (auto& v : a_) v *= s;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, cplx s) { return a *= s; }
    friend Matrix operator*(cplx s, Matrix a) { return a *= s; }

    double frobenius_norm() const {
        double s = 0.0;
        for (const auto& v : a_) s += std::norm(v);
        return std::sqrt(s);
    }

    /// Frobenius mass of the strictly off-diagonal part; the Jacobi
    /// sweep's convergence measure.
    double off_diagonal_norm() const {
        double s = 0.0;
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j)
                if (i != j) s += std::norm((*this)(i, j));
        return std::sqrt(s);
    }

    bool is_hermitian(double tol = kTol.hermiticity) const {
        for (int i = 0; i < dim_; ++i) {
            if (std::abs((*this)(i, i).imag()) > tol) return false;
            for (int j = i + 1; j < dim_; ++j)
                if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) return false;
        }
        return true;
    }

  private:
    void check_same_dim(const Matrix& o) const {
        if (o.dim_ != dim_) throw validation_error("Matrix: dimension mismatch");
    }

    int dim_;
    std::vector<cplx> a_;
};

inline Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.dim() != b.dim()) throw validation_error("matmul: dimension mismatch");
    const int n = a.dim();
    Matrix r(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx{}) continue;
            for (int j = 0; j < n; ++j) r(i, j) += aik * b(k, j);
        }
    return r;
}

inline cplx trace(const Matrix& m) {
    cplx t{};
    for (int i = 0; i < m.dim(); ++i) t += m(i, i);
    return t;
}

inline double frobenius_dist(const Matrix& a, const Matrix& b) {
    if (a.dim() != b.dim()) throw validation_error("frobenius_dist: dimension mismatch");
    return (a - b).frobenius_norm();
}

} // namespace spinmap
