#include "ssli/logfun.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "internal.hpp"
#include "quadrature.hpp"
#include "ssli/errors.hpp"

namespace ssli {

namespace {

using std::numbers::pi;

void require_off_cut(std::span<const Complex> z) {
  for (const auto& zi : z) {
    if (zi.imag() == 0.0 && zi.real() <= 0.0) {
      throw Error(ErrorCode::kBranchCut, "entry " + std::to_string(zi.real()) + " lies on (-inf, 0]");
    }
  }
}

void require_k(int k, int lo, int hi) {
  if (k < lo || k > hi) {
    throw Error(ErrorCode::kIndexError,
                "k = " + std::to_string(k) + " outside " + std::to_string(lo) + ".." + std::to_string(hi));
  }
}

// -sum_i (-z_i)^p / prod_{j!=i}(z_j - z_i) * log z_i
Complex log_divided_sum(std::span<const Complex> z, int power) {
  Complex sum(0.0, 0.0);
  for (std::size_t i = 0; i < z.size(); ++i) {
    Complex denom(1.0, 0.0);
    for (std::size_t j = 0; j < z.size(); ++j) {
      if (j != i) denom *= z[j] - z[i];
    }
    sum += internal::ipow(-z[i], power) / denom * std::log(z[i]);
  }
  return -sum;
}

// int_0^inf t^p / prod_j (t + z_j) dt for 0 <= p <= n-2.
double moment_integral(std::span<const Complex> z, int power, const ToleranceConfig& tol) {
  require_off_cut(z);
  const int n = static_cast<int>(z.size());
  auto integrand = [&](double t) -> double {
    if (t <= 1.0) {
      Complex prod(1.0, 0.0);
      for (const auto& zj : z) prod *= t + zj;
      if (std::abs(prod.imag()) > 1e-10 * std::abs(prod)) {
        throw Error(ErrorCode::kNotConjugateClosed, "denominator is not real on the positive axis");
      }
      return internal::ipow(t, power) / prod.real();
    }
    // Factor t^n out of the product to keep large t finite.
    Complex prod(1.0, 0.0);
    for (const auto& zj : z) prod *= 1.0 + zj / t;
    if (std::abs(prod.imag()) > 1e-10 * std::abs(prod)) {
      throw Error(ErrorCode::kNotConjugateClosed, "denominator is not real on the positive axis");
    }
    return 1.0 / (internal::ipow(t, n - power) * prod.real());
  };
  return internal::integrate_half_line(integrand, tol.quad_abs_tol, tol.quad_rel_tol).value;
}

Complex hhat(std::span<const double> a, Complex z) {
  // z^n + a_{n-1} z^{n-1} + ... + a_1 z + 1, a[0] = a_1.
  Complex p(1.0, 0.0);
  for (std::size_t i = a.size(); i-- > 0;) p = p * z + a[i];
  return p * z + 1.0;
}

Complex hhat_derivative(std::span<const double> a, Complex z) {
  const double n = static_cast<double>(a.size() + 1);
  Complex p(n, 0.0);
  for (std::size_t i = a.size(); i-- > 0;) p = p * z + static_cast<double>(i + 1) * a[i];
  return p;
}

ComplexVector hhat_roots(std::span<const double> a) {
  ComplexVector coeffs;
  coeffs.reserve(a.size() + 2);
  coeffs.emplace_back(1.0, 0.0);
  for (std::size_t i = a.size(); i-- > 0;) coeffs.emplace_back(a[i], 0.0);
  coeffs.emplace_back(1.0, 0.0);
  return polynomial_roots(coeffs);
}

void require_contour_clearance(std::span<const double> a, double outer, double inner, int nodes) {
  if (nodes < 64) throw Error(ErrorCode::kInvalidArgument, "contour needs at least 64 nodes per piece");
  if (!(inner > 0.0) || !(outer > inner)) throw Error(ErrorCode::kInvalidArgument, "need 0 < inner < outer radius");
  const double log_span = std::log(outer / inner);
  for (const auto& r : hhat_roots(a)) {
    const double mod = std::abs(r);
    const double outer_gap = outer - mod;
    const double inner_gap = mod - inner;
    const double t_near = std::clamp(r.real(), inner, outer);
    const double bank_gap = std::abs(r - Complex(t_near, 0.0));
    const bool tight = outer_gap < 2.0 * (2.0 * pi * outer / nodes) || inner_gap < 2.0 * (2.0 * pi * inner / nodes) ||
                       bank_gap < 2.0 * (t_near * log_span / nodes);
    if (tight) {
      throw Error(ErrorCode::kContourTooTight, "root at modulus " + std::to_string(mod) + " too close to the contour");
    }
  }
}

// Integral over the closed slit-annulus path of g(z, log(-z)) dz, with
// log(-z) continued as log t - i pi on the north bank and log t + i pi on the
// south bank.
template <typename G>
Complex slit_annulus_integral(G g, double outer, double inner, int nodes) {
  const int panels = (nodes + 15) / 16;
  auto circle = [&](double radius) {
    return internal::gauss_legendre_panels(
        [&](double theta) {
          const Complex z = std::polar(radius, theta);
          const Complex log_neg(std::log(radius), theta - pi);
          return g(z, log_neg) * Complex(0.0, 1.0) * z;
        },
        0.0, 2.0 * pi, panels);
  };
  // Banks in s = log t; the north bank runs outward, the south bank inward.
  const Complex banks = internal::gauss_legendre_panels(
      [&](double s) {
        const double t = std::exp(s);
        const Complex z(t, 0.0);
        return (g(z, Complex(s, -pi)) - g(z, Complex(s, pi))) * t;
      },
      std::log(inner), std::log(outer), panels);
  return circle(outer) - circle(inner) + banks;
}

}  // namespace

FunctionalValue f_squared_log(std::span<const Complex> z) {
  require_off_cut(z);
  Complex sum(0.0, 0.0);
  for (const auto& zi : z) {
    const Complex l = std::log(zi);
    sum += l * l;
  }
  return {sum.real(), std::abs(sum.imag())};
}

FunctionalValue f_squared_log(const OrderedRootVector& z) { return f_squared_log(z.roots()); }

double f_squared_log(std::span<const double> x) {
  double sum = 0.0;
  for (double xi : x) {
    if (!(xi > 0.0)) throw Error(ErrorCode::kBranchCut, "entry " + std::to_string(xi) + " is not positive");
    const double l = std::log(xi);
    sum += l * l;
  }
  return sum;
}

FunctionalValue entropy_g(std::span<const Complex> z) {
  require_off_cut(z);
  Complex sum(0.0, 0.0);
  for (const auto& zi : z) sum -= zi * std::log(zi);
  return {sum.real(), std::abs(sum.imag())};
}

FunctionalValue entropy_g(const OrderedRootVector& z) { return entropy_g(z.roots()); }

double entropy_g(std::span<const double> x) {
  double sum = 0.0;
  for (double xi : x) {
    if (!(xi > 0.0)) throw Error(ErrorCode::kBranchCut, "entry " + std::to_string(xi) + " is not positive");
    sum -= xi * std::log(xi);
  }
  return sum;
}

double df_de_closed(const OrderedRootVector& z, int k, const ToleranceConfig& tol) {
  const int n = static_cast<int>(z.size());
  require_k(k, 1, n - 1);
  require_distinct(z.roots(), tol);
  return 2.0 * log_divided_sum(z.roots(), n - k - 1).real();
}

double df_de_integral(const OrderedRootVector& z, int k, const ToleranceConfig& tol) {
  const int n = static_cast<int>(z.size());
  require_k(k, 1, n - 1);
  return 2.0 * moment_integral(z.roots(), n - k - 1, tol);
}

double df_de_fd(const CoefficientVector& e, int k, const ToleranceConfig& tol) {
  const int n = static_cast<int>(e.size());
  require_k(k, 1, n);
  const double h = tol.fd_step * e.e(static_cast<std::size_t>(k));
  auto shifted = [&](double delta) {
    std::vector<double> v = e.vector();
    v[static_cast<std::size_t>(k - 1)] += delta;
    return f_squared_log(phi(CoefficientVector(std::move(v)), tol)).value;
  };
  return (shifted(h) - shifted(-h)) / (2.0 * h);
}

double dg_de_closed(const OrderedRootVector& z, int k, const ToleranceConfig& tol) {
  const int n = static_cast<int>(z.size());
  require_k(k, 2, n);
  require_distinct(z.roots(), tol);
  return log_divided_sum(z.roots(), n - k).real();
}

double dg_de_integral(const OrderedRootVector& z, int k, const ToleranceConfig& tol) {
  const int n = static_cast<int>(z.size());
  require_k(k, 2, n);
  return moment_integral(z.roots(), n - k, tol);
}

double dg_de(const OrderedRootVector& z, int k, const ToleranceConfig& tol) {
  require_k(k, 2, static_cast<int>(z.size()));
  double scale = 1.0;
  for (const auto& zi : z.roots()) scale = std::max(scale, std::abs(zi));
  if (min_pairwise_gap(z.roots()) >= tol.distinct_tol * scale) return dg_de_closed(z, k, tol);
  return dg_de_integral(z, k, tol);
}

ContourGeometry default_contour(std::span<const double> a) {
  double m = 1.0;
  for (double ai : a) m = std::max(m, std::abs(ai));
  return {2.0 * (1.0 + m), 0.5 / (1.0 + m)};
}

double f_hat_contour(std::span<const double> a, double outer_radius, double inner_radius, int nodes) {
  if (a.empty()) throw Error(ErrorCode::kInvalidArgument, "need n >= 2 (at least one coefficient a_1)");
  for (double ai : a) {
    if (!(ai > 0.0)) throw Error(ErrorCode::kNonPositiveCoefficient, "contour coefficients must be positive");
  }
  require_contour_clearance(a, outer_radius, inner_radius, nodes);
  const Complex total = slit_annulus_integral(
      [&](Complex z, Complex log_neg) { return log_neg * log_neg * hhat_derivative(a, z) / hhat(a, z); },
      outer_radius, inner_radius, nodes);
  return (total / Complex(0.0, 2.0 * pi)).real();
}

double f_hat_contour(std::span<const double> a, int nodes) {
  const ContourGeometry g = default_contour(a);
  return f_hat_contour(a, g.outer_radius, g.inner_radius, nodes);
}

double df_hat_da_contour(std::span<const double> a, int j, double outer_radius, double inner_radius, int nodes) {
  require_k(j, 1, static_cast<int>(a.size()));
  for (double ai : a) {
    if (!(ai > 0.0)) throw Error(ErrorCode::kNonPositiveCoefficient, "contour coefficients must be positive");
  }
  require_contour_clearance(a, outer_radius, inner_radius, nodes);
  const Complex total = slit_annulus_integral(
      [&](Complex z, Complex log_neg) { return log_neg * internal::ipow(z, j - 1) / hhat(a, z); }, outer_radius,
      inner_radius, nodes);
  return (-total / Complex(0.0, pi)).real();
}

ContourDerivative df_de_contour(const CoefficientVector& e, int k, int nodes) {
  const int n = static_cast<int>(e.size());
  require_k(k, 1, n - 1);
  const double c = std::pow(e.e(static_cast<std::size_t>(n)), 1.0 / n);
  std::vector<double> a(static_cast<std::size_t>(n - 1));
  for (int j = 1; j <= n - 1; ++j) a[static_cast<std::size_t>(j - 1)] = e.e(static_cast<std::size_t>(n - j)) / std::pow(c, n - j);
  const ContourGeometry g = default_contour(a);
  const double dfhat = df_hat_da_contour(a, n - k, g.outer_radius, g.inner_radius, nodes);
  return {dfhat / std::pow(c, k), c, std::move(a)};
}

DerivativeReport derivative_report(const CoefficientVector& e, int k, const DerivativeMethods& methods,
                                   const ToleranceConfig& tol) {
  const int n = static_cast<int>(e.size());
  require_k(k, 1, n - 1);
  DerivativeReport report;
  report.k = k;
  const OrderedRootVector z = phi(e, tol);
  if (methods.closed) {
    try {
      report.closed_form = df_de_closed(z, k, tol);
    } catch (const Error& err) {
      if (err.code() != ErrorCode::kDuplicateRoots) throw;
      report.closed_skipped_duplicate_roots = true;
    }
  }
  if (methods.integral) report.integral_form = df_de_integral(z, k, tol);
  if (methods.finite_difference) report.finite_difference = df_de_fd(e, k, tol);
  if (methods.contour) report.contour_form = df_de_contour(e, k).value;

  std::vector<double> present;
  for (const auto& v : {report.closed_form, report.integral_form, report.finite_difference, report.contour_form}) {
    if (v) present.push_back(*v);
  }
  for (std::size_t i = 0; i < present.size(); ++i)
    for (std::size_t j = i + 1; j < present.size(); ++j)
      report.max_pairwise_discrepancy = std::max(report.max_pairwise_discrepancy, std::abs(present[i] - present[j]));
  return report;
}

}  // namespace ssli
