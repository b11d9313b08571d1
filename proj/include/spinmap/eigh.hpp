#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "spinmap/matrix.hpp"

namespace spinmap {

/// Spectral decomposition of a Hermitian matrix: real eigenvalues sorted
/// descending, matching orthonormal eigenvectors as columns of `vectors`.
struct EigenDecomposition {
    std::vector<double> values;
    Matrix vectors;
};

namespace detail {

// One complex Jacobi rotation zeroing M(p,q). Rotation matrix R acts on
// the (p,q) plane: R(p,p)=c, R(p,q)=s, R(q,p)=-conj(s), R(q,q)=c with
// c real, |c|^2+|s|^2=1. M <- R^dagger M R, V <- V R.
inline void jacobi_rotate(Matrix& m, Matrix& v, int p, int q) {
    const cplx g = m(p, q);
    const double ag = std::abs(g);
    if (ag == 0.0) return;
    const cplx phase = g / ag;

    const double alpha = m(p, p).real();
    const double beta = m(q, q).real();
    const double tau = (beta - alpha) / (2.0 * ag);
    const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const cplx s = phase * (t * c);

    const int n = m.dim();
    for (int k = 0; k < n; ++k) {
        const cplx mkp = m(k, p);
        const cplx mkq = m(k, q);
        m(k, p) = c * mkp - std::conj(s) * mkq;
        m(k, q) = s * mkp + c * mkq;
    }
    for (int k = 0; k < n; ++k) {
        const cplx mpk = m(p, k);
        const cplx mqk = m(q, k);
        m(p, k) = c * mpk - s * mqk;
        m(q, k) = std::conj(s) * mpk + c * mqk;
    }
    m(p, q) = 0.0;
    m(q, p) = 0.0;
    m(p, p) = cplx{m(p, p).real(), 0.0};
    m(q, q) = cplx{m(q, q).real(), 0.0};

    for (int k = 0; k < n; ++k) {
        const cplx vkp = v(k, p);
        const cplx vkq = v(k, q);
        v(k, p) = c * vkp - std::conj(s) * vkq;
        v(k, q) = s * vkp + c * vkq;
    }
}

} // namespace detail

/// Cyclic Jacobi eigensolver for complex Hermitian matrices. Sweeps until
/// the off-diagonal Frobenius mass drops below the convergence tolerance
/// (relative to the matrix norm) or 50 sweeps elapse.
inline EigenDecomposition eigh(const Matrix& input) {
    if (!input.is_hermitian())
        throw validation_error("eigh: matrix is not Hermitian within tolerance");

    const int n = input.dim();
    Matrix m = input;
    Matrix v = Matrix::identity(n);
    const double thresh = kTol.convergence * std::max(1.0, m.frobenius_norm());

    for (int sweep = 0; sweep < 50; ++sweep) {
        if (m.off_diagonal_norm() < thresh) break;
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q)
                if (std::abs(m(p, q)) > 0.0) detail::jacobi_rotate(m, v, p, q);
    }

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return m(a, a).real() > m(b, b).real(); });

    EigenDecomposition d;
    d.values.reserve(static_cast<std::size_t>(n));
    d.vectors = Matrix(n);
    for (int j = 0; j < n; ++j) {
        d.values.push_back(m(order[static_cast<std::size_t>(j)], order[static_cast<std::size_t>(j)]).real());
        for (int i = 0; i < n; ++i) d.vectors(i, j) = v(i, order[static_cast<std::size_t>(j)]);
    }
    return d;
}

/// V f(Lambda) V^dagger. Eigenvalues in [-1e-10, 0) are clamped to zero
/// before applying f, so sqrt of a numerically-PSD matrix is safe; an f
/// that is still undefined on the spectrum raises a domain error.
template <typename F>
Matrix mat_fn(const Matrix& input, F&& f) {
    const EigenDecomposition d = eigh(input);
    const int n = input.dim();
    Matrix r(n);
    for (int k = 0; k < n; ++k) {
        double lambda = d.values[static_cast<std::size_t>(k)];
        if (lambda < 0.0 && lambda >= -1e-10) lambda = 0.0;
        const double fl = f(lambda);
        if (!std::isfinite(fl))
            throw domain_error("mat_fn: function undefined at eigenvalue " +
                               std::to_string(lambda));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                r(i, j) += fl * d.vectors(i, k) * std::conj(d.vectors(j, k));
    }
    // symmetrize away rotation round-off
    for (int i = 0; i < n; ++i) {
        r(i, i) = cplx{r(i, i).real(), 0.0};
        for (int j = i + 1; j < n; ++j) {
            const cplx avg = 0.5 * (r(i, j) + std::conj(r(j, i)));
            r(i, j) = avg;
            r(j, i) = std::conj(avg);
        }
    }
    return r;
}

inline Matrix mat_sqrt(const Matrix& m) {
    return mat_fn(m, [](double x) { return std::sqrt(x); });
}

} // namespace spinmap
