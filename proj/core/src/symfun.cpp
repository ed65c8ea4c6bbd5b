#include "ssli/symfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "ssli/errors.hpp"
#include "internal.hpp"

namespace ssli {

namespace {

template <typename T>
std::vector<T> expand_symmetric(std::span<const T> x) {
  // poly[k] holds e_k of the factors consumed so far; poly[0] = 1.
  std::vector<T> poly(x.size() + 1, T(0));
  poly[0] = T(1);
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t k = i + 1; k >= 1; --k) poly[k] += x[i] * poly[k - 1];
  }
  return {poly.begin() + 1, poly.end()};
}

void require_positive(const std::vector<double>& v, ErrorCode code, const char* what) {
  if (v.empty()) throw Error(ErrorCode::kInvalidArgument, std::string(what) + " must be non-empty");
  for (double x : v) {
    if (!(x > 0.0) || !std::isfinite(x)) {
      throw Error(code, std::string(what) + " entries must be finite and > 0, got " + std::to_string(x));
    }
  }
}

Complex cauchy_weight(std::span<const Complex> z, std::size_t i) {
  Complex denom(1.0, 0.0);
  for (std::size_t j = 0; j < z.size(); ++j) {
    if (j != i) denom *= z[i] - z[j];
  }
  return denom;
}

}  // namespace

PositiveVector::PositiveVector(std::vector<double> entries) : entries_(std::move(entries)) {
  require_positive(entries_, ErrorCode::kInvalidArgument, "PositiveVector");
}

CoefficientVector::CoefficientVector(std::vector<double> entries) : entries_(std::move(entries)) {
  require_positive(entries_, ErrorCode::kNonPositiveCoefficient, "CoefficientVector");
}

std::vector<double> elementary_symmetric(std::span<const double> x) { return expand_symmetric(x); }

std::vector<Complex> elementary_symmetric(std::span<const Complex> x) { return expand_symmetric(x); }

CoefficientVector coefficients_of(const PositiveVector& x) {
  return CoefficientVector(elementary_symmetric(x.values()));
}

double min_pairwise_gap(std::span<const Complex> z) {
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < z.size(); ++i)
    for (std::size_t j = i + 1; j < z.size(); ++j) gap = std::min(gap, std::abs(z[i] - z[j]));
  return gap;
}

void require_distinct(std::span<const Complex> z, const ToleranceConfig& tol) {
  double scale = 1.0;
  for (const auto& zi : z) scale = std::max(scale, std::abs(zi));
  const double gap = min_pairwise_gap(z);
  if (gap < tol.distinct_tol * scale) {
    throw Error(ErrorCode::kDuplicateRoots, "minimum pairwise gap " + std::to_string(gap) +
                                                " below distinct tolerance");
  }
}

Complex pfd_residual(std::span<const Complex> z, int k, Complex t, const ToleranceConfig& tol) {
  const int n = static_cast<int>(z.size());
  if (k < 0 || k > n - 1) throw Error(ErrorCode::kIndexError, "k must lie in 0..n-1");
  require_distinct(z, tol);
  double scale = 1.0;
  for (const auto& zi : z) scale = std::max(scale, std::abs(zi));
  for (const auto& zi : z) {
    if (std::abs(t - zi) < tol.distinct_tol * scale) throw Error(ErrorCode::kPoleHit, "t coincides with a node");
  }

  Complex lhs(0.0, 0.0);
  Complex rhs_denom(1.0, 0.0);
  for (std::size_t i = 0; i < z.size(); ++i) {
    lhs += internal::ipow(z[i], k) / ((t - z[i]) * cauchy_weight(z, i));
    rhs_denom *= t - z[i];
  }
  return lhs - internal::ipow(t, k) / rhs_denom;
}

Complex pfd_zero_sum(std::span<const Complex> z, int k, const ToleranceConfig& tol) {
  const int n = static_cast<int>(z.size());
  if (k < 0 || k > n - 2) throw Error(ErrorCode::kIndexError, "k must lie in 0..n-2");
  require_distinct(z, tol);
  Complex sum(0.0, 0.0);
  for (std::size_t i = 0; i < z.size(); ++i) sum += internal::ipow(z[i], k) / cauchy_weight(z, i);
  return sum;
}

}  // namespace ssli
