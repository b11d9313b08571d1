#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "spinmap/spin_model.hpp"

namespace spinmap {

/// Point on the probability simplex. Probabilities below 1e-15 are
/// treated as exact zeros in entropy sums (0 ln 0 := 0).
class ProbVector {
  public:
    explicit ProbVector(std::vector<double> p) : p_(std::move(p)) {
        if (p_.empty()) throw validation_error("ProbVector: empty");
        double sum = 0.0;
        for (double x : p_) {
            if (!(x >= 0.0 && x <= 1.0))
                throw validation_error("ProbVector: component outside [0,1]");
            sum += x;
        }
        if (std::abs(sum - 1.0) > 1e-12)
            throw validation_error("ProbVector: components do not sum to 1");
    }

    static ProbVector uniform(int n) {
        return ProbVector(std::vector<double>(static_cast<std::size_t>(n), 1.0 / n));
    }

    std::size_t size() const { return p_.size(); }
    double operator[](std::size_t i) const { return p_[i]; }
    const std::vector<double>& data() const { return p_; }

  private:
    std::vector<double> p_;
};

namespace detail {

constexpr double kProbZero = 1e-15;

inline double plogp(double p) { return p < kProbZero ? 0.0 : -p * std::log(p); }

inline void check_same_length(const ProbVector& p, const ProbVector& q) {
    if (p.size() != q.size()) throw validation_error("probability vectors differ in length");
}

} // namespace detail

/// S = -sum p ln p, in nats.
inline double shannon_entropy(const ProbVector& p) {
    double s = 0.0;
    for (std::size_t j = 0; j < p.size(); ++j) s += detail::plogp(p[j]);
    return s;
}

/// K[p|q] = sum p ln(p/q). Infinite divergence (p_j > 0 where q_j = 0)
/// raises a domain error.
inline double kl_divergence(const ProbVector& p, const ProbVector& q) {
    detail::check_same_length(p, q);
    double k = 0.0;
    for (std::size_t j = 0; j < p.size(); ++j) {
        if (p[j] < detail::kProbZero) continue;
        if (q[j] < detail::kProbZero)
            throw domain_error("kl_divergence: infinite (absolute continuity violated)");
        k += p[j] * std::log(p[j] / q[j]);
    }
    return k;
}

inline ProbVector mix(const ProbVector& p, const ProbVector& q, double pi1, double pi2) {
    detail::check_same_length(p, q);
    std::vector<double> m(p.size());
    for (std::size_t j = 0; j < p.size(); ++j) m[j] = pi1 * p[j] + pi2 * q[j];
    return ProbVector(std::move(m));
}

/// J0[p,q] = K[p | (p+q)/2]; finite because the midpoint dominates p.
inline double j0(const ProbVector& p, const ProbVector& q) {
    return kl_divergence(p, mix(p, q, 0.5, 0.5));
}

/// J1[p,q] = 2 S[(p+q)/2] - S[p] - S[q] = J0[p,q] + J0[q,p].
inline double j1(const ProbVector& p, const ProbVector& q) {
    return 2.0 * shannon_entropy(mix(p, q, 0.5, 0.5)) - shannon_entropy(p) - shannon_entropy(q);
}

/// Weighted Jensen-Shannon divergence, nats. Non-negative, zero iff p = q.
inline double jsd(const ProbVector& p, const ProbVector& q, double pi1, double pi2) {
    if (!(pi1 > 0.0 && pi2 > 0.0) || std::abs(pi1 + pi2 - 1.0) > 1e-12)
        throw validation_error("jsd: weights must be positive and sum to 1");
    return shannon_entropy(mix(p, q, pi1, pi2)) - pi1 * shannon_entropy(p) -
           pi2 * shannon_entropy(q);
}

inline double von_neumann_entropy(const DensityMatrix& rho) {
    double s = 0.0;
    for (double lambda : rho.spectrum()) s += detail::plogp(lambda);
    return s;
}

/// S_vN / ln(dim), in [0,1].
inline double normalized_entropy(const DensityMatrix& rho) {
    return von_neumann_entropy(rho) / std::log(4.0);
}

/// S[(rho1+rho2)/2] - S[rho1]/2 - S[rho2]/2 via diagonalization of the
/// mixture. Clamped at zero against round-off.
inline double quantum_jsd(const DensityMatrix& rho1, const DensityMatrix& rho2) {
    const DensityMatrix mixture(
        (rho1.matrix() + rho2.matrix()) * cplx{0.5, 0.0});
    const double j = von_neumann_entropy(mixture) - 0.5 * von_neumann_entropy(rho1) -
                     0.5 * von_neumann_entropy(rho2);
    return std::max(0.0, j);
}

/// C_JS = J^{1/2,1/2}(rho, rho_MM) * H_vN(rho); vanishes at perfect order
/// and at maximal randomness.
inline double entropic_nontriviality(const DensityMatrix& rho) {
    return quantum_jsd(rho, maximally_mixed()) * normalized_entropy(rho);
}

/// Wootters concurrence. The lambdas are the eigenvalue square roots of
/// sqrt(rho) rho~ sqrt(rho), i.e. the singular values of sqrt(rho~) sqrt(rho);
/// they are read off a Hermitian block embedding [[0, A], [A^dagger, 0]] so
/// the small ones keep absolute accuracy and only the Hermitian solver is
/// ever invoked.
inline double concurrence_wootters(const DensityMatrix& rho) {
    // spin flip: F rho* F with F = (sigma_y x sigma_y) = antidiag(-1,1,1,-1)
    Matrix flip(4);
    flip(0, 3) = -1.0;
    flip(1, 2) = 1.0;
    flip(2, 1) = 1.0;
    flip(3, 0) = -1.0;
    Matrix rho_tilde = matmul(matmul(flip, rho.matrix().conjugate()), flip);
    rho_tilde = (rho_tilde + rho_tilde.adjoint()) * cplx{0.5, 0.0};

    const Matrix a = matmul(mat_sqrt(rho_tilde), mat_sqrt(rho.matrix()));
    Matrix embed(8);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            embed(i, 4 + j) = a(i, j);
            embed(4 + j, i) = std::conj(a(i, j));
        }

    // spectrum is {+sigma_i, -sigma_i}; the top four are the lambdas, descending
    const auto lambdas = eigh(embed).values;
    return std::max(0.0, lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3]);
}

/// Closed-form concurrence for X-shaped states (nonzeros confined to the
/// diagonal and anti-diagonal).
inline double concurrence_xstate(const DensityMatrix& rho) {
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (i != j && i + j != 3 && std::abs(rho(i, j)) > 1e-12)
                throw validation_error("concurrence_xstate: state lacks the X pattern");
    const double a = std::abs(rho(1, 2)) - std::sqrt(rho(0, 0).real() * rho(3, 3).real());
    const double b = std::abs(rho(0, 3)) - std::sqrt(rho(1, 1).real() * rho(2, 2).real());
    return 2.0 * std::max({0.0, a, b});
}

/// Analytic thermal concurrence: zero at or above the critical temperature
/// 8 J_H/(k_B ln 3), otherwise (e^{8w}-3)/(1+e^{-2y}+e^{2y}+e^{8w})
/// evaluated in the overflow-safe form with e^{-8w} factored out.
inline double concurrence_thermal(const ModelParams& p, double t) {
    p.validate();
    if (!(t > 0.0)) throw validation_error("concurrence_thermal: temperature must be positive");
    const double w = p.j_h / (p.k_b * t);
    const double y = p.b / (p.k_b * t);
    // numerator e^{8w} - 3 <= 0  <=>  8w <= ln 3
    if (8.0 * w <= std::log(3.0)) return 0.0;
    const double up = -8.0 * w + 2.0 * y;
    if (up > 700.0) return 0.0; // denominator dominated by e^{2y-8w}
    return (1.0 - 3.0 * std::exp(-8.0 * w)) /
           (1.0 + std::exp(-8.0 * w) + std::exp(-8.0 * w - 2.0 * y) + std::exp(up));
}

/// Wootters E_f(C) in bits: h2((1 + sqrt(1-C^2))/2).
inline double entanglement_of_formation(double c) {
    if (!(c >= 0.0 && c <= 1.0))
        throw validation_error("entanglement_of_formation: concurrence must lie in [0,1]");
    const double u = 0.5 * (1.0 + std::sqrt(std::max(0.0, 1.0 - c * c)));
    if (u >= 1.0) return 0.0;
    const double v = 1.0 - u;
    return -(u * std::log2(u) + v * std::log2(v));
}

/// Inverse purity R = 1/Tr[rho^2], from 1 (pure) to 4 (maximally mixed).
inline double degree_of_mixture(const DensityMatrix& rho) {
    const double purity = trace(matmul(rho.matrix(), rho.matrix())).real();
    return 1.0 / purity;
}

} // namespace spinmap
