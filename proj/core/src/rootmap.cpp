#include "ssli/rootmap.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

#include "ssli/errors.hpp"

namespace ssli {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct HornerResult {
  Complex value;
  Complex derivative;
  double error_bound;  // rounding-level bound on |value|
};

HornerResult horner(std::span<const Complex> a, Complex z) {
  Complex p = a[0];
  Complex dp(0.0, 0.0);
  double bound = std::abs(a[0]);
  const double az = std::abs(z);
  for (std::size_t k = 1; k < a.size(); ++k) {
    dp = dp * z + p;
    p = p * z + a[k];
    bound = bound * az + std::abs(a[k]);
  }
  return {p, dp, 4.0 * static_cast<double>(a.size()) * kEps * bound};
}

double starting_radius(std::span<const Complex> a) {
  const std::size_t n = a.size() - 1;
  const double last = std::abs(a[n]);
  if (last > 0.0) return std::pow(last, 1.0 / static_cast<double>(n));
  double r = 0.0;
  for (std::size_t k = 1; k <= n; ++k) r = std::max(r, std::pow(std::abs(a[k]), 1.0 / static_cast<double>(k)));
  return r > 0.0 ? r : 1.0;
}

using Groups = std::vector<std::vector<std::size_t>>;

// Single-linkage groups of members whose pairwise distance is within
// radius * (1 + max modulus).
Groups link(const ComplexVector& z, const std::vector<std::size_t>& members, double radius) {
  const std::size_t m = members.size();
  std::vector<std::size_t> parent(m);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const Complex a = z[members[i]], b = z[members[j]];
      if (std::abs(a - b) <= radius * (1.0 + std::max(std::abs(a), std::abs(b)))) parent[find(i)] = find(j);
    }
  }
  Groups groups(m);
  for (std::size_t i = 0; i < m; ++i) groups[find(i)].push_back(members[i]);
  std::erase_if(groups, [](const auto& g) { return g.empty(); });
  return groups;
}

// Taylor coefficients q_j = p^(j)(c) / j! for j = 0..m, and the same
// recurrence on |coefficients| and |c| as a rounding scale.
void taylor_at(const MonicPolynomial& p, Complex c, std::size_t m, std::vector<Complex>& q, std::vector<double>& scale) {
  const std::size_t n = p.degree();
  std::vector<Complex> a(p.coeffs().begin(), p.coeffs().end());
  std::vector<double> b(n + 1);
  for (std::size_t k = 0; k <= n; ++k) b[k] = std::abs(p[k]);
  const double ac = std::abs(c);
  q.assign(m + 1, Complex(0.0, 0.0));
  scale.assign(m + 1, 0.0);
  for (std::size_t j = 0; j <= m && j <= n; ++j) {
    const std::size_t len = n + 1 - j;
    for (std::size_t k = 1; k < len; ++k) {
      a[k] += a[k - 1] * c;
      b[k] += b[k - 1] * ac;
    }
    q[j] = a[len - 1];
    scale[j] = b[len - 1];
  }
}

// An m-member group with centroid c is an m-fold root when every lower
// Taylor coefficient is what a spread of rel_tol * (1 + |c|) or plain
// rounding can produce relative to q_m.
bool is_multiple_root(const MonicPolynomial& p, Complex& c, std::size_t m, double rel_tol) {
  std::vector<Complex> q;
  std::vector<double> scale;
  // An m-fold root is a simple root of p^(m-1); polish the centroid there.
  for (int it = 0; it < 8; ++it) {
    taylor_at(p, c, m, q, scale);
    if (q[m] == Complex(0.0, 0.0)) break;
    const Complex step = q[m - 1] / (static_cast<double>(m) * q[m]);
    c -= step;
    if (std::abs(step) <= 4.0 * std::numeric_limits<double>::epsilon() * (1.0 + std::abs(c))) break;
  }
  taylor_at(p, c, m, q, scale);
  const double spread = rel_tol * (1.0 + std::abs(c));
  const double rounding = 64.0 * std::numeric_limits<double>::epsilon();
  double binom = 1.0;
  for (std::size_t j = m; j-- > 0;) {
    binom = binom * static_cast<double>(j + 1) / static_cast<double>(m - j);
    const double allowed = binom * std::pow(spread, static_cast<double>(m - j)) * std::abs(q[m]) + rounding * scale[j];
    if (std::abs(q[j]) > allowed) return false;
  }
  return true;
}

// Roots of a multiple factor come back from the solver spread by roughly
// (eps)^(1/m). Groups found at a loose radius collapse to the polished
// centroid if they pass the Taylor test; otherwise only rel_tol-close roots
// merge, to their plain centroid.
void merge_clusters(ComplexVector& z, const MonicPolynomial& p, double rel_tol) {
  constexpr double kLooseRadius = 1e-3;
  std::vector<std::size_t> all(z.size());
  std::iota(all.begin(), all.end(), std::size_t{0});
  Groups accepted;
  for (auto& loose : link(z, all, std::max(kLooseRadius, rel_tol))) {
    if (loose.size() < 2) continue;
    Complex c(0.0, 0.0);
    for (std::size_t i : loose) c += z[i];
    c /= static_cast<double>(loose.size());
    if (is_multiple_root(p, c, loose.size(), rel_tol)) {
      for (std::size_t i : loose) z[i] = c;
    } else {
      for (auto& tight : link(z, loose, rel_tol))
        if (tight.size() > 1) accepted.push_back(std::move(tight));
    }
  }
  for (const auto& g : accepted) {
    Complex c(0.0, 0.0);
    for (std::size_t i : g) c += z[i];
    c /= static_cast<double>(g.size());
    for (std::size_t i : g) z[i] = c;
  }
}

// Near-real entries go to the axis; the remaining ones are matched with the
// closest conjugate partner (globally greedy) and replaced by an exact pair.
// Returns false if strict and a partner is missing or too far away.
bool snap_conjugates(ComplexVector& z, double pairing_tol, bool strict) {
  for (auto& zi : z) {
    if (std::abs(zi.imag()) <= pairing_tol * (1.0 + std::abs(zi))) zi = Complex(zi.real(), 0.0);
  }
  std::vector<std::size_t> upper, lower;
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (z[i].imag() > 0.0) upper.push_back(i);
    if (z[i].imag() < 0.0) lower.push_back(i);
  }
  struct Candidate {
    double distance;
    std::size_t up, low;
  };
  std::vector<Candidate> candidates;
  for (std::size_t u : upper)
    for (std::size_t l : lower) candidates.push_back({std::abs(z[u] - std::conj(z[l])), u, l});
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Candidate& a, const Candidate& b) { return a.distance < b.distance; });

  std::vector<bool> used(z.size(), false);
  bool ok = true;
  for (const auto& c : candidates) {
    if (used[c.up] || used[c.low]) continue;
    used[c.up] = used[c.low] = true;
    if (c.distance > pairing_tol * (1.0 + std::abs(z[c.up]))) ok = false;
    const double re = 0.5 * (z[c.up].real() + z[c.low].real());
    const double im = 0.5 * (z[c.up].imag() - z[c.low].imag());
    z[c.up] = Complex(re, im);
    z[c.low] = Complex(re, -im);
  }
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (z[i].imag() != 0.0 && !used[i]) {
      ok = false;
      z[i] = Complex(z[i].real(), 0.0);
    }
  }
  return ok || !strict;
}

}  // namespace

MonicPolynomial::MonicPolynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty() || coeffs_[0] != 1.0) {
    throw Error(ErrorCode::kInvalidArgument, "monic polynomial needs coeffs[0] == 1");
  }
}

Complex MonicPolynomial::operator()(Complex t) const {
  Complex p(1.0, 0.0);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) p = p * t + coeffs_[k];
  return p;
}

MonicPolynomial build_char_poly(const CoefficientVector& e) {
  std::vector<double> c(e.size() + 1);
  c[0] = 1.0;
  for (std::size_t k = 1; k <= e.size(); ++k) c[k] = (k % 2 == 0 ? 1.0 : -1.0) * e.e(k);
  return MonicPolynomial(std::move(c));
}

ComplexVector polynomial_roots(std::span<const Complex> a) {
  if (a.empty() || a[0] != Complex(1.0, 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "polynomial_roots expects a monic coefficient list");
  }
  const std::size_t n = a.size() - 1;
  if (n == 0) return {};
  if (n == 1) return {-a[1]};
  if (std::all_of(a.begin() + 1, a.end(), [](const Complex& c) { return c == Complex(0.0, 0.0); })) {
    return ComplexVector(n, Complex(0.0, 0.0));
  }

  const double radius = starting_radius(a);
  ComplexVector z(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n) + 0.4;
    z[k] = std::polar(radius, angle);
  }

  std::vector<bool> done(n, false);
  for (int sweep = 0; sweep < 500; ++sweep) {
    bool all_done = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      const HornerResult h = horner(a, z[i]);
      if (std::abs(h.value) <= h.error_bound) {
        done[i] = true;
        continue;
      }
      Complex repulsion(0.0, 0.0);
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i) repulsion += 1.0 / (z[i] - z[j]);
      }
      Complex denom = h.derivative - h.value * repulsion;
      if (denom == Complex(0.0, 0.0)) denom = Complex(kEps, kEps);
      const Complex step = h.value / denom;
      z[i] -= step;
      if (std::abs(step) <= kEps * std::abs(z[i])) done[i] = true;
      all_done = all_done && done[i];
    }
    if (all_done) break;
  }

  for (auto& zi : z) {
    const HornerResult h = horner(a, zi);
    if (h.derivative == Complex(0.0, 0.0)) continue;
    const Complex candidate = zi - h.value / h.derivative;
    if (std::abs(horner(a, candidate).value) < std::abs(h.value)) zi = candidate;
  }
  return z;
}

ComplexVector polynomial_roots(const MonicPolynomial& p) {
  ComplexVector a(p.coeffs().begin(), p.coeffs().end());
  return polynomial_roots(a);
}

bool ordered_before(const Complex& a, const Complex& b) noexcept {
  if (a.real() != b.real()) return a.real() > b.real();
  return a.imag() > b.imag();
}

OrderedRootVector::OrderedRootVector(ComplexVector roots, const ToleranceConfig& tol, bool strict)
    : roots_(std::move(roots)) {
  if (!snap_conjugates(roots_, tol.pairing_tol, strict)) {
    throw Error(ErrorCode::kNotConjugateClosed, "roots are not closed under conjugation");
  }
  for (const auto& z : roots_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw Error(ErrorCode::kInvalidArgument, "non-finite root");
    }
    if (z.imag() == 0.0 && z.real() <= 0.0) {
      throw Error(ErrorCode::kRootOnCut, "root " + std::to_string(z.real()) + " lies on (-inf, 0]");
    }
  }
  std::sort(roots_.begin(), roots_.end(), ordered_before);

  std::vector<bool> used(roots_.size(), false);
  for (std::size_t i = 0; i < roots_.size(); ++i) {
    if (roots_[i].imag() <= 0.0 || used[i]) continue;
    for (std::size_t j = i + 1; j < roots_.size(); ++j) {
      if (!used[j] && roots_[j] == std::conj(roots_[i])) {
        used[i] = used[j] = true;
        pairs_.emplace_back(i, j);
        break;
      }
    }
  }
}

OrderedRootVector OrderedRootVector::from_roots(ComplexVector roots, const ToleranceConfig& tol) {
  return OrderedRootVector(std::move(roots), tol, /*strict=*/true);
}

std::vector<double> OrderedRootVector::real_parts() const {
  std::vector<double> out;
  out.reserve(roots_.size());
  for (const auto& z : roots_) out.push_back(z.real());
  return out;
}

OrderedRootVector phi(const CoefficientVector& e, const ToleranceConfig& tol) {
  const MonicPolynomial p = build_char_poly(e);
  ComplexVector z = polynomial_roots(p);
  merge_clusters(z, p, tol.multiplicity_tol);
  return OrderedRootVector(std::move(z), tol, /*strict=*/false);
}

double discriminant(const MonicPolynomial& p) {
  const int n = static_cast<int>(p.degree());
  if (n < 2) throw Error(ErrorCode::kDegreeTooLow, "discriminant needs degree >= 2");

  // Sylvester matrix of p (degree n) and p' (degree n-1): size 2n-1.
  const int size = 2 * n - 1;
  Eigen::MatrixXd syl = Eigen::MatrixXd::Zero(size, size);
  for (int row = 0; row < n - 1; ++row)
    for (int k = 0; k <= n; ++k) syl(row, row + k) = p[static_cast<std::size_t>(k)];
  for (int row = 0; row < n; ++row)
    for (int k = 0; k < n; ++k) syl(n - 1 + row, row + k) = (n - k) * p[static_cast<std::size_t>(k)];

  const double resultant = syl.partialPivLu().determinant();
  const long half = static_cast<long>(n) * (n - 1) / 2;
  return (half % 2 == 0 ? 1.0 : -1.0) * resultant;
}

bool has_repeated_root(const CoefficientVector& e, const ToleranceConfig& tol) {
  const auto z = phi(e, tol);
  double scale = 1.0;
  for (const auto& w : z.roots()) scale = std::max(scale, std::abs(w));
  return min_pairwise_gap(z.roots()) <= tol.distinct_tol * scale;
}

CoefficientVector interpolate(const CoefficientVector& e0, const CoefficientVector& e1, double s) {
  if (e0.size() != e1.size()) throw Error(ErrorCode::kDimensionMismatch, "coefficient vectors differ in length");
  std::vector<double> out(e0.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = (1.0 - s) * e0[i] + s * e1[i];
  return CoefficientVector(std::move(out));
}

DegeneracyScan segment_degeneracies(const CoefficientVector& e0, const CoefficientVector& e1, int samples,
                                    const ToleranceConfig& tol) {
  if (samples < 2) throw Error(ErrorCode::kInvalidArgument, "samples must be >= 2");
  if (e0.size() != e1.size()) throw Error(ErrorCode::kDimensionMismatch, "coefficient vectors differ in length");
  DegeneracyScan scan;
  if (e0.size() < 2) return scan;  // a linear polynomial never has repeated roots

  auto disc = [&](double s) { return discriminant(build_char_poly(interpolate(e0, e1, s))); };
  auto repeated = [&](double s) { return has_repeated_root(interpolate(e0, e1, s), tol); };
  constexpr double kWidth = 1e-10;

  std::vector<double> grid(static_cast<std::size_t>(samples));
  std::vector<double> d(grid.size());
  std::vector<char> zero(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    grid[i] = static_cast<double>(i) / static_cast<double>(samples - 1);
    d[i] = disc(grid[i]);
    zero[i] = d[i] == 0.0 || repeated(grid[i]);
  }
  if (std::all_of(zero.begin(), zero.end(), [](char z) { return z != 0; })) {
    scan.all_degenerate = true;
    return scan;
  }

  std::vector<double> found;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (zero[i]) found.push_back(grid[i]);
  }
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    if (zero[i] || zero[i + 1]) continue;
    if ((d[i] < 0.0) == (d[i + 1] < 0.0)) continue;
    double lo = grid[i], hi = grid[i + 1];
    double dlo = d[i];
    while (hi - lo > kWidth) {
      const double mid = 0.5 * (lo + hi);
      const double dm = disc(mid);
      if (dm == 0.0) {
        lo = hi = mid;
        break;
      }
      if ((dm < 0.0) == (dlo < 0.0)) {
        lo = mid;
        dlo = dm;
      } else {
        hi = mid;
      }
    }
    found.push_back(0.5 * (lo + hi));
  }
  // Tangential zeros: D touches zero without changing sign.
  for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
    const bool same_sign = (d[i - 1] < 0.0) == (d[i] < 0.0) && (d[i] < 0.0) == (d[i + 1] < 0.0);
    if (!same_sign || zero[i]) continue;
    if (!(std::abs(d[i]) < std::abs(d[i - 1]) && std::abs(d[i]) <= std::abs(d[i + 1]))) continue;
    const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = grid[i - 1], b = grid[i + 1];
    double c = b - ratio * (b - a), x = a + ratio * (b - a);
    double fc = std::abs(disc(c)), fx = std::abs(disc(x));
    while (b - a > kWidth) {
      if (fc < fx) {
        b = x;
        x = c;
        fx = fc;
        c = b - ratio * (b - a);
        fc = std::abs(disc(c));
      } else {
        a = c;
        c = x;
        fc = fx;
        x = a + ratio * (b - a);
        fx = std::abs(disc(x));
      }
    }
    const double s_min = 0.5 * (a + b);
    if (repeated(s_min)) found.push_back(s_min);
  }

  std::sort(found.begin(), found.end());
  for (double s : found) {
    if (scan.s.empty() || s - scan.s.back() > 1e-9) scan.s.push_back(s);
  }
  return scan;
}

}  // namespace ssli
