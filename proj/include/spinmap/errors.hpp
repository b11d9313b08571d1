#pragma once

#include <stdexcept>
#include <string>

namespace spinmap {

/// Bad input: shape mismatch, broken invariant, out-of-range argument.
struct validation_error : std::invalid_argument {
    explicit validation_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Mathematically undefined request (sqrt of negative spectrum,
/// inverse map outside its attainable interval, infinite divergence).
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

/// File system failure, reported with path context.
struct io_error : std::runtime_error {
    explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

/// Broken internal assumption (e.g. bracket expansion exhausted).
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

/// Central tolerance knobs. Consumer-facing checks default to 1e-10,
/// internal iteration convergence to 1e-14.
struct Tolerances {
    double consumer    = 1e-10;
    double convergence = 1e-14;
    double hermiticity = 1e-12;
};

inline constexpr Tolerances kTol{};

} // namespace spinmap
