#pragma once

#include <array>
#include <cmath>

#include "spinmap/eigh.hpp"
#include "spinmap/matrix.hpp"

namespace spinmap {

/// Antiferromagnetic two-spin Heisenberg model in a z-axis field.
/// Basis ordering throughout: |00>, |01>, |10>, |11>.
struct ModelParams {
    double j_h = 1.0; ///< coupling, > 0
    double b = 0.0;   ///< field, >= 0
    double k_b = 1.0; ///< Boltzmann constant

    void validate() const {
        if (!(j_h > 0.0)) throw validation_error("ModelParams: j_h must be positive");
        if (!(b >= 0.0)) throw validation_error("ModelParams: b must be non-negative");
        if (!(k_b > 0.0)) throw validation_error("ModelParams: k_b must be positive");
    }
};

enum class BellChoice { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

/// 4x4 unit-trace positive-semidefinite Hermitian matrix.
class DensityMatrix {
  public:
    explicit DensityMatrix(Matrix m) : m_(std::move(m)) {
        if (m_.dim() != 4) throw validation_error("DensityMatrix: dimension must be 4");
        if (!m_.is_hermitian()) throw validation_error("DensityMatrix: not Hermitian");
        if (std::abs(trace(m_) - cplx{1.0, 0.0}) > 1e-12)
            throw validation_error("DensityMatrix: trace differs from 1");
        for (double lambda : eigh(m_).values)
            if (lambda < -1e-10)
                throw validation_error("DensityMatrix: negative eigenvalue " +
                                       std::to_string(lambda));
    }

    const Matrix& matrix() const { return m_; }
    const cplx& operator()(int i, int j) const { return m_(i, j); }

    /// Eigenvalues, descending, tiny negatives clamped to zero.
    std::vector<double> spectrum() const {
        auto v = eigh(m_).values;
        for (auto& x : v)
            if (x < 0.0) x = 0.0;
        return v;
    }

  private:
    Matrix m_;
};

/// H = B(sz x I + I x sz) + J_H (sx x sx + sy x sy + sz x sz) restricted
/// to two sites: corners 2J+-2B, middle block [[-2J, 4J], [4J, -2J]].
inline Matrix hamiltonian(const ModelParams& p) {
    p.validate();
    Matrix h(4);
    h(0, 0) = 2.0 * p.j_h + 2.0 * p.b;
    h(1, 1) = -2.0 * p.j_h;
    h(2, 2) = -2.0 * p.j_h;
    h(1, 2) = 4.0 * p.j_h;
    h(2, 1) = 4.0 * p.j_h;
    h(3, 3) = 2.0 * p.j_h - 2.0 * p.b;
    return h;
}

/// Gibbs state exp(-H/kT)/Z in closed form. The Boltzmann exponents are
/// shifted by their maximum before exponentiation so temperatures down to
/// 1e-3 J_H stay exact in double precision.
inline DensityMatrix thermal_state(const ModelParams& p, double t) {
    p.validate();
    if (!(t > 0.0)) throw validation_error("thermal_state: temperature must be positive");

    const double w = p.j_h / (p.k_b * t);
    const double y = p.b / (p.k_b * t);

    // Spectrum of H: 2J+2B, 2J-2B (corner states), 2J and -6J (middle block).
    const std::array<double, 4> exponents = {-2.0 * w - 2.0 * y, -2.0 * w + 2.0 * y,
                                             -2.0 * w, 6.0 * w};
    const double shift = *std::max_element(exponents.begin(), exponents.end());
    const double e_down = std::exp(exponents[0] - shift);  // |00>
    const double e_up = std::exp(exponents[1] - shift);    // |11>
    const double e_triplet = std::exp(exponents[2] - shift);
    const double e_singlet = std::exp(exponents[3] - shift);
    const double z = e_down + e_up + e_triplet + e_singlet;

    Matrix m(4);
    m(0, 0) = e_down / z;
    m(3, 3) = e_up / z;
    m(1, 1) = 0.5 * (e_triplet + e_singlet) / z;
    m(2, 2) = m(1, 1);
    m(1, 2) = 0.5 * (e_triplet - e_singlet) / z;
    m(2, 1) = m(1, 2);
    return DensityMatrix(std::move(m));
}

inline Matrix bell_ket_outer(BellChoice bell) {
    std::array<cplx, 4> psi{};
    const double r = 1.0 / std::sqrt(2.0);
    switch (bell) {
        case BellChoice::PhiPlus: psi = {r, 0.0, 0.0, r}; break;
        case BellChoice::PhiMinus: psi = {r, 0.0, 0.0, -r}; break;
        case BellChoice::PsiPlus: psi = {0.0, r, r, 0.0}; break;
        case BellChoice::PsiMinus: psi = {0.0, r, -r, 0.0}; break;
    }
    Matrix m(4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m(i, j) = psi[static_cast<std::size_t>(i)] * std::conj(psi[static_cast<std::size_t>(j)]);
    return m;
}

/// x |bell><bell| + (1-x)/4 I.
inline DensityMatrix werner_state(double x, BellChoice bell = BellChoice::PhiPlus) {
    if (!(x >= 0.0 && x <= 1.0)) throw validation_error("werner_state: x must lie in [0,1]");
    Matrix m = bell_ket_outer(bell) * cplx{x, 0.0} + Matrix::identity(4) * cplx{(1.0 - x) / 4.0, 0.0};
    return DensityMatrix(std::move(m));
}

inline DensityMatrix maximally_mixed() {
    return DensityMatrix(Matrix::identity(4) * cplx{0.25, 0.0});
}

/// T=0 limit of the thermal state: the singlet projector below the
/// critical field 4 J_H, the equal singlet/|11> mixture at it (relative
/// band 1e-12 J_H), and |11><11| above it.
inline DensityMatrix ground_state(const ModelParams& p) {
    p.validate();
    const double b_c = 4.0 * p.j_h;
    Matrix m(4);
    if (std::abs(p.b - b_c) <= 1e-12 * p.j_h) {
        m(1, 1) = 0.25;
        m(2, 2) = 0.25;
        m(1, 2) = -0.25;
        m(2, 1) = -0.25;
        m(3, 3) = 0.5;
    } else if (p.b < b_c) {
        m(1, 1) = 0.5;
        m(2, 2) = 0.5;
        m(1, 2) = -0.5;
        m(2, 1) = -0.5;
    } else {
        m(3, 3) = 1.0;
    }
    return DensityMatrix(std::move(m));
}

} // namespace spinmap
