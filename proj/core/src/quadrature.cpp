#include "quadrature.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <cstdio>

#include "ssli/errors.hpp"

namespace ssli::internal {

QuadratureResult integrate_half_line(const std::function<double(double)>& f, double abs_tol, double rel_tol) {
  using boost::math::quadrature::gauss_kronrod;
  auto mapped = [&](double u) {
    const double one_minus = 1.0 - u;
    const double t = u / one_minus;
    return f(t) / (one_minus * one_minus);
  };
  double error = 0.0;
  double l1 = 0.0;
  // Boost stops a panel on either its local relative test or a halving share
  // of the top-level budget, so the summed error bound is twice the request.
  const double value = gauss_kronrod<double, 31>::integrate(mapped, 0.0, 1.0, 30, 0.5 * rel_tol, &error, &l1);
  if (!std::isfinite(value) || error > std::max(abs_tol, rel_tol * l1)) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "estimated error %.3g exceeds tolerance for value %.17g", error, value);
    throw Error(ErrorCode::kQuadratureFailure, buf);
  }
  return {value, error};
}

std::complex<double> gauss_legendre_panels(const std::function<std::complex<double>(double)>& f, double a, double b,
                                           int panels) {
  using boost::math::quadrature::gauss;
  std::complex<double> total(0.0, 0.0);
  const double width = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    const double lo = a + p * width;
    total += gauss<double, 16>::integrate(f, lo, lo + width);
  }
  return total;
}

}  // namespace ssli::internal
