#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "ssli/symfun.hpp"
#include "ssli/tolerance.hpp"

namespace ssli {

/// Monic real polynomial t^n + c_1 t^{n-1} + ... + c_n, stored highest degree
/// first with coeffs[0] == 1.
class MonicPolynomial {
 public:
  explicit MonicPolynomial(std::vector<double> coeffs);

  std::size_t degree() const noexcept { return coeffs_.size() - 1; }
  std::span<const double> coeffs() const noexcept { return coeffs_; }
  double operator[](std::size_t i) const { return coeffs_[i]; }
  Complex operator()(Complex t) const;

 private:
  std::vector<double> coeffs_;
};

/// h_e(t) = t^n - e_1 t^{n-1} + e_2 t^{n-2} - ... + (-1)^n e_n.
MonicPolynomial build_char_poly(const CoefficientVector& e);

/// All roots, with multiplicity, of the monic polynomial whose coefficients
/// are given highest degree first (coeffs[0] must be 1). Aberth-Ehrlich
/// simultaneous iteration from a fixed starting circle, then one guarded
/// Newton step per root. Deterministic.
ComplexVector polynomial_roots(std::span<const Complex> monic_coeffs);
ComplexVector polynomial_roots(const MonicPolynomial& p);

/// C^{n,up} order: descending real part, ties by descending imaginary part.
bool ordered_before(const Complex& a, const Complex& b) noexcept;

/// Roots in C^{n,up} order, exactly closed under conjugation, none on
/// (-inf, 0]. Immutable once built.
class OrderedRootVector {
 public:
  /// Snaps near-real entries to the axis, matches conjugate partners and
  /// sorts. Throws NotConjugateClosed when an entry has no partner within
  /// pairing_tol, RootOnCut for a real entry <= 0.
  static OrderedRootVector from_roots(ComplexVector roots, const ToleranceConfig& tol = {});

  std::size_t size() const noexcept { return roots_.size(); }
  const Complex& operator[](std::size_t i) const { return roots_[i]; }
  std::span<const Complex> roots() const noexcept { return roots_; }
  /// Index pairs (i, j) with roots[j] == conj(roots[i]) and Im roots[i] > 0.
  const std::vector<std::pair<std::size_t, std::size_t>>& conjugate_pairs() const noexcept { return pairs_; }
  bool all_real() const noexcept { return pairs_.empty(); }
  /// Real parts; meaningful when all_real().
  std::vector<double> real_parts() const;

 private:
  friend OrderedRootVector phi(const CoefficientVector& e, const ToleranceConfig& tol);
  OrderedRootVector(ComplexVector roots, const ToleranceConfig& tol, bool strict);

  ComplexVector roots_;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
};

/// The inverse of z -> (e_1(z), ..., e_n(z)) on positive coefficients:
/// the ordered roots of h_e. Clusters closer than multiplicity_tol collapse
/// into repeated entries, so (t-1)^2 yields exactly (1, 1).
OrderedRootVector phi(const CoefficientVector& e, const ToleranceConfig& tol = {});

/// prod_{i<j} (z_i - z_j)^2 via the Sylvester resultant of p and p'.
double discriminant(const MonicPolynomial& p);

/// The numerical zero test for D(h_e): phi(e) has two roots closer than
/// distinct_tol * max(1, max|z|). The determinant alone cannot decide this,
/// since D spans many orders of magnitude across root configurations.
bool has_repeated_root(const CoefficientVector& e, const ToleranceConfig& tol = {});

struct DegeneracyScan {
  /// Sentinel: the discriminant vanished at every sample.
  bool all_degenerate = false;
  /// Sorted s-values in [0, 1] where h_{(1-s)e0 + s e1} has a repeated root.
  std::vector<double> s;
};

/// Scans D(h_{e^s}) on a uniform grid; sign changes are bisected and local
/// dips of |D| are golden-section refined, both to width 1e-10.
DegeneracyScan segment_degeneracies(const CoefficientVector& e0, const CoefficientVector& e1, int samples,
                                    const ToleranceConfig& tol = {});

/// (1 - s) e0 + s e1, componentwise.
CoefficientVector interpolate(const CoefficientVector& e0, const CoefficientVector& e1, double s);

}  // namespace ssli
