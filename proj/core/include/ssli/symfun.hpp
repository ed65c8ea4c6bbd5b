#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "ssli/tolerance.hpp"

namespace ssli {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// A point of R_+^n: strictly positive, finite, n >= 1.
class PositiveVector {
 public:
  explicit PositiveVector(std::vector<double> entries);

  std::size_t size() const noexcept { return entries_.size(); }
  double operator[](std::size_t i) const { return entries_[i]; }
  std::span<const double> values() const noexcept { return entries_; }
  const std::vector<double>& vector() const noexcept { return entries_; }

 private:
  std::vector<double> entries_;
};

/// Values e_1..e_n of the elementary symmetric polynomials. Strictly positive.
class CoefficientVector {
 public:
  explicit CoefficientVector(std::vector<double> entries);

  std::size_t size() const noexcept { return entries_.size(); }
  /// 1-based access matching e_1..e_n.
  double e(std::size_t k) const { return entries_.at(k - 1); }
  double operator[](std::size_t i) const { return entries_[i]; }
  std::span<const double> values() const noexcept { return entries_; }
  const std::vector<double>& vector() const noexcept { return entries_; }

 private:
  std::vector<double> entries_;
};

/// (e_1(x), ..., e_n(x)) by multiplying out prod (t + x_i) one factor at a
/// time. O(n^2) and free of binomial enumeration.
std::vector<double> elementary_symmetric(std::span<const double> x);
std::vector<Complex> elementary_symmetric(std::span<const Complex> x);

/// Same, packaged as a validated coefficient vector. Positivity of the input
/// guarantees positivity of every e_k.
CoefficientVector coefficients_of(const PositiveVector& x);

/// Smallest pairwise distance |z_i - z_j| (infinity for n < 2).
double min_pairwise_gap(std::span<const Complex> z);

/// Throws DuplicateRoots if the minimum gap is below
/// tol.distinct_tol * max(1, max|z_i|).
void require_distinct(std::span<const Complex> z, const ToleranceConfig& tol);

/// LHS - RHS of the partial fraction identity
///   sum_i z_i^k / ((t - z_i) prod_{j!=i}(z_i - z_j)) = t^k / prod_j (t - z_j)
/// for pairwise distinct z, 0 <= k <= n-1 and t outside {z_i}.
Complex pfd_residual(std::span<const Complex> z, int k, Complex t, const ToleranceConfig& tol = {});

/// sum_i z_i^k / prod_{j!=i}(z_i - z_j), which vanishes for 0 <= k <= n-2.
Complex pfd_zero_sum(std::span<const Complex> z, int k, const ToleranceConfig& tol = {});

}  // namespace ssli
