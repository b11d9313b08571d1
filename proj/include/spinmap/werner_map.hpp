#pragma once

#include <cmath>

#include "spinmap/measures.hpp"

namespace spinmap {

/// T_c = 8 J_H/(k_B ln 3), B_c = 4 J_H.
struct CriticalConstants {
    double t_c;
    double b_c;
};

inline CriticalConstants critical_constants(const ModelParams& p) {
    p.validate();
    return {8.0 * p.j_h / (p.k_b * std::log(3.0)), 4.0 * p.j_h};
}

enum class WernerRegime { Separable, EntangledLocal, ChshViolating };

/// Separable for x <= 1/3, CHSH-violating for x > 1/sqrt(2).
inline WernerRegime classify_werner(double x) {
    if (!(x >= 0.0 && x <= 1.0)) throw validation_error("classify_werner: x must lie in [0,1]");
    if (x <= 1.0 / 3.0) return WernerRegime::Separable;
    if (x <= 1.0 / std::sqrt(2.0)) return WernerRegime::EntangledLocal;
    return WernerRegime::ChshViolating;
}

/// Forward map result. The bijection with temperature is claimed only for
/// B <= B_c; above it the value is still computed but flagged.
struct MapPoint {
    double x;
    bool in_bijection_domain;
};

namespace detail {

// Unclamped concurrence expression of the thermal state, negative above
// T_c. Same overflow-safe form as concurrence_thermal.
inline double concurrence_raw(const ModelParams& p, double t) {
    const double w = p.j_h / (p.k_b * t);
    const double y = p.b / (p.k_b * t);
    const double up = -8.0 * w + 2.0 * y;
    if (up > 700.0) return 0.0;
    return (1.0 - 3.0 * std::exp(-8.0 * w)) /
           (1.0 + std::exp(-8.0 * w) + std::exp(-8.0 * w - 2.0 * y) + std::exp(up));
}

} // namespace detail

/// x(T, B) = (2/3)[C_raw + 1/2]. Strictly decreasing in T for B <= B_c;
/// hits 1/3 at T_c for every B, tends to 1 (B < B_c), 2/3 (B = B_c) or
/// 1/3 (B > B_c) as T -> 0 and to 0 as T -> infinity.
inline MapPoint x_of_temperature(const ModelParams& p, double t) {
    p.validate();
    if (!(t > 0.0)) throw validation_error("x_of_temperature: temperature must be positive");
    const double b_c = 4.0 * p.j_h;
    return {(2.0 / 3.0) * (detail::concurrence_raw(p, t) + 0.5), p.b <= b_c};
}

/// Numerical inverse of x_of_temperature by bisection, valid for
/// B <= B_c and x strictly inside (0, x_limit) with x_limit the T -> 0
/// value (1 below the critical field, 2/3 at it).
inline double temperature_of_x(const ModelParams& p, double x) {
    p.validate();
    const CriticalConstants cc = critical_constants(p);
    if (p.b > cc.b_c)
        throw domain_error("temperature_of_x: no bijection for B above the critical field");

    const bool at_critical_field = std::abs(p.b - cc.b_c) <= 1e-12 * p.j_h;
    const double x_upper = at_critical_field ? 2.0 / 3.0 : 1.0;
    if (!(x > 0.0 && x < x_upper))
        throw domain_error("temperature_of_x: x outside the attainable interval (0, " +
                           std::to_string(x_upper) + ")");

    const auto f = [&](double t) { return x_of_temperature(p, t).x; };

    // x(T) decreases, so the low end of the bracket carries the high x.
    double t_lo = 1e-6 * cc.t_c;
    double t_hi = 1e3 * cc.t_c;
    for (int i = 0; i < 60 && f(t_lo) < x; ++i) t_lo *= 0.5;
    for (int i = 0; i < 60 && f(t_hi) > x; ++i) t_hi *= 2.0;
    if (f(t_lo) < x || f(t_hi) > x)
        throw internal_error("temperature_of_x: bracket expansion failed");

    while (t_hi - t_lo > 1e-12 * cc.t_c) {
        const double mid = 0.5 * (t_lo + t_hi);
        if (f(mid) >= x)
            t_lo = mid;
        else
            t_hi = mid;
    }
    return 0.5 * (t_lo + t_hi);
}

/// The paper-facing alias: the temperature a Werner mixing parameter maps
/// back to at fixed field.
inline double effective_temperature(double x, const ModelParams& p) {
    return temperature_of_x(p, x);
}

} // namespace spinmap
