#pragma once

#include <complex>
#include <functional>

namespace ssli::internal {

struct QuadratureResult {
  double value;
  double error_estimate;
};

/// Adaptive Gauss-Kronrod on [0, inf) after t = u / (1 - u). Throws
/// QuadratureFailure when the error estimate misses
/// max(abs_tol, rel_tol * |value|).
QuadratureResult integrate_half_line(const std::function<double(double)>& f, double abs_tol, double rel_tol);

/// Composite 16-point Gauss-Legendre over `panels` equal panels of [a, b].
std::complex<double> gauss_legendre_panels(const std::function<std::complex<double>(double)>& f, double a, double b,
                                           int panels);

}  // namespace ssli::internal
