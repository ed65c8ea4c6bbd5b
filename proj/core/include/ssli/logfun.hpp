#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ssli/rootmap.hpp"
#include "ssli/symfun.hpp"
#include "ssli/tolerance.hpp"

namespace ssli {

/// Real part of a functional evaluated on a conjugate-closed root set, plus
/// the size of the imaginary part that was dropped.
struct FunctionalValue {
  double value = 0.0;
  double imaginary_residual = 0.0;
};

/// sum_i (log z_i)^2 with the principal logarithm. Throws BranchCut for an
/// entry on (-inf, 0].
FunctionalValue f_squared_log(std::span<const Complex> z);
FunctionalValue f_squared_log(const OrderedRootVector& z);
double f_squared_log(std::span<const double> x);

/// -sum_i z_i log z_i, principal branch.
FunctionalValue entropy_g(std::span<const Complex> z);
FunctionalValue entropy_g(const OrderedRootVector& z);
double entropy_g(std::span<const double> x);

/// d(f o phi)/de_k from the closed divided-difference sum
///   -2 sum_i (-z_i)^{n-k-1} / prod_{j!=i}(z_j - z_i) * log z_i.
/// Needs pairwise distinct roots and 1 <= k <= n-1.
double df_de_closed(const OrderedRootVector& z, int k, const ToleranceConfig& tol = {});

/// The same derivative as 2 * int_0^inf t^{n-k-1} / prod_j (t + z_j) dt.
/// Defined on repeated roots too.
double df_de_integral(const OrderedRootVector& z, int k, const ToleranceConfig& tol = {});

/// Central difference of e -> f(phi(e)) in coordinate k with step fd_step*e_k.
double df_de_fd(const CoefficientVector& e, int k, const ToleranceConfig& tol = {});

/// d(g o phi)/de_k for 2 <= k <= n: closed sum when the roots are distinct,
/// otherwise int_0^inf t^{n-k} / prod_j (t + z_j) dt.
double dg_de(const OrderedRootVector& z, int k, const ToleranceConfig& tol = {});
double dg_de_closed(const OrderedRootVector& z, int k, const ToleranceConfig& tol = {});
double dg_de_integral(const OrderedRootVector& z, int k, const ToleranceConfig& tol = {});

/// Radii of the slit-annulus contour for hhat_a(z) = z^n + a_{n-1} z^{n-1}
/// + ... + a_1 z + 1. Every root has modulus in [1/(1+m), 1+m] with
/// m = max(1, max a_i); the defaults leave a factor 2 on both sides.
struct ContourGeometry {
  double outer_radius;
  double inner_radius;
};
ContourGeometry default_contour(std::span<const double> a);

/// (1 / 2 pi i) * contour integral of (log(-z))^2 hhat'/hhat over the slit
/// annulus (inner circle clockwise, north bank outward, outer circle
/// counter-clockwise, south bank inward). `nodes` Gauss-Legendre nodes per
/// piece, >= 64. Equals sum over roots zhat of (log(-zhat))^2.
/// Throws ContourTooTight if a root lies outside the annulus or within two
/// node spacings of the path.
double f_hat_contour(std::span<const double> a, double outer_radius, double inner_radius, int nodes = 256);
double f_hat_contour(std::span<const double> a, int nodes = 256);

/// d fhat / d a_j on the same finite contour, via
///   -(1 / pi i) * contour integral of log(-z) z^{j-1} / hhat(z).
double df_hat_da_contour(std::span<const double> a, int j, double outer_radius, double inner_radius, int nodes = 256);

/// Normalized contour evaluation of d(f o phi)/de_k: rescales roots by
/// c = e_n^{1/n} so the constant term becomes 1, then
///   d(f o phi)/de_k = c^{-k} * d fhat/d a_{n-k}.
struct ContourDerivative {
  double value;
  double scale;           // c
  std::vector<double> a;  // a_1..a_{n-1} of the normalized polynomial
};
ContourDerivative df_de_contour(const CoefficientVector& e, int k, int nodes = 256);

struct DerivativeMethods {
  bool closed = true;
  bool integral = true;
  bool finite_difference = true;
  bool contour = true;
};

struct DerivativeReport {
  int k = 0;
  std::optional<double> closed_form;
  std::optional<double> integral_form;
  std::optional<double> finite_difference;
  std::optional<double> contour_form;
  /// Largest |a - b| over the present evaluations.
  double max_pairwise_discrepancy = 0.0;
  /// Set when the closed form was requested but the roots repeat.
  bool closed_skipped_duplicate_roots = false;
};

/// Runs the requested evaluators at e for one k in 1..n-1.
DerivativeReport derivative_report(const CoefficientVector& e, int k, const DerivativeMethods& methods = {},
                                   const ToleranceConfig& tol = {});

}  // namespace ssli
