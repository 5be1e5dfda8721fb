#pragma once

#include <stdexcept>
#include <string>

namespace kacrice {

/// All basis members vanish at the evaluation point, so the covariance
/// kernel K_n(x,x) is zero and no intensity is defined there.
struct DegeneratePointError : std::runtime_error {
    explicit DegeneratePointError(const std::string& what) : std::runtime_error(what) {}
};

/// tau_n(x) is numerically zero: the value/derivative pair is perfectly
/// correlated and the two-dimensional frame collapses.
struct DegenerateFrameError : std::runtime_error {
    explicit DegenerateFrameError(const std::string& what) : std::runtime_error(what) {}
};

/// The Fourier inversion produced an imaginary residual far above the
/// requested tolerance; the quadrature spec or the characteristic
/// function is inconsistent.
struct InversionError : std::runtime_error {
    explicit InversionError(const std::string& what) : std::runtime_error(what) {}
};

/// Bound parameters violate the hypotheses the explicit constants need
/// (a > 0, q >= 1, positive derivative bounds).
struct HypothesisError : std::domain_error {
    explicit HypothesisError(const std::string& what) : std::domain_error(what) {}
};

/// The requested limit formula has no value at |x| = 1; callers must use
/// the finite-n boundary expression instead.
struct BoundaryError : std::domain_error {
    explicit BoundaryError(const std::string& what) : std::domain_error(what) {}
};

/// A sampled coefficient vector produced the identically-zero polynomial.
struct DegeneratePolynomialError : std::runtime_error {
    explicit DegeneratePolynomialError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace kacrice
