#include "ssli/matrixapps.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <unsupported/Eigen/MatrixFunctions>

#include "ssli/errors.hpp"
#include "ssli/logfun.hpp"
#include "ssli/symfun.hpp"

namespace ssli {

namespace {

void require_same_size(Eigen::Index a, Eigen::Index b) {
  if (a != b) throw Error(ErrorCode::kDimensionMismatch, std::to_string(a) + " vs " + std::to_string(b));
}

Eigen::MatrixXd symmetrize(const Eigen::MatrixXd& a) { return 0.5 * (a + a.transpose()); }

std::vector<double> spectrum(const SpdMatrix& u) {
  return {u.eigenvalues().data(), u.eigenvalues().data() + u.eigenvalues().size()};
}

// log U = (1/2) log(F^T F); avoids a square root before the logarithm.
Eigen::MatrixXd log_stretch(const DeformationGradient& f) {
  return 0.5 * SpdMatrix(f.matrix().transpose() * f.matrix()).log();
}

double binomial(int n, int k) {
  double b = 1.0;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

// ||sym log(Q^T F)||^2, +inf where the principal log is undefined.
double sym_log_objective(const Eigen::MatrixXd& q, const Eigen::MatrixXd& f) {
  const Eigen::MatrixXd x = q.transpose() * f;
  Eigen::EigenSolver<Eigen::MatrixXd> es(x, false);
  if (es.info() != Eigen::Success) return std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const Complex lam = es.eigenvalues()(i);
    if (lam.imag() == 0.0 && lam.real() <= 0.0) return std::numeric_limits<double>::infinity();
  }
  const Eigen::MatrixXd l = x.log();
  if (!l.allFinite()) return std::numeric_limits<double>::infinity();
  return symmetrize(l).squaredNorm();
}

Eigen::Matrix2d rotation2(double theta) {
  Eigen::Matrix2d q;
  q << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
  return q;
}

// exp of the skew matrix of w (Rodrigues).
Eigen::Matrix3d rotation3(const Eigen::Vector3d& w) {
  const double angle = w.norm();
  Eigen::Matrix3d k;
  k << 0, -w.z(), w.y(), w.z(), 0, -w.x(), -w.y(), w.x(), 0;
  if (angle < 1e-12) return Eigen::Matrix3d::Identity() + k;
  return Eigen::Matrix3d::Identity() + std::sin(angle) / angle * k +
         (1.0 - std::cos(angle)) / (angle * angle) * k * k;
}

Eigen::Matrix3d random_rotation3(std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::Quaterniond q(normal(rng), normal(rng), normal(rng), normal(rng));
  q.normalize();
  return q.toRotationMatrix();
}

struct Minimum {
  double value;
  Eigen::Vector3d point;
};

// Nelder-Mead on R^3; infinite values behave as "worst".
template <class F>
Minimum nelder_mead(const F& fn, const Eigen::Vector3d& start, double size, int max_evals) {
  std::array<Eigen::Vector3d, 4> p;
  std::array<double, 4> v{};
  p[0] = start;
  for (int i = 0; i < 3; ++i) {
    p[i + 1] = start;
    p[i + 1](i) += size;
  }
  int evals = 0;
  for (int i = 0; i < 4; ++i, ++evals) v[i] = fn(p[i]);

  while (evals < max_evals) {
    std::array<int, 4> idx{0, 1, 2, 3};
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return v[a] < v[b]; });
    const int best = idx[0], worst = idx[3], second = idx[2];
    if (std::isfinite(v[worst]) && v[worst] - v[best] <= 1e-15 * (1.0 + std::abs(v[best])) &&
        (p[worst] - p[best]).norm() <= 1e-9) {
      break;
    }
    Eigen::Vector3d centroid = Eigen::Vector3d::Zero();
    for (int i = 0; i < 4; ++i)
      if (i != worst) centroid += p[i] / 3.0;

    const Eigen::Vector3d xr = centroid + (centroid - p[worst]);
    const double fr = fn(xr);
    ++evals;
    if (fr < v[best]) {
      const Eigen::Vector3d xe = centroid + 2.0 * (centroid - p[worst]);
      const double fe = fn(xe);
      ++evals;
      if (fe < fr) {
        p[worst] = xe, v[worst] = fe;
      } else {
        p[worst] = xr, v[worst] = fr;
      }
      continue;
    }
    if (fr < v[second]) {
      p[worst] = xr, v[worst] = fr;
      continue;
    }
    const Eigen::Vector3d xc = fr < v[worst] ? Eigen::Vector3d(centroid + 0.5 * (xr - centroid))
                                             : Eigen::Vector3d(centroid + 0.5 * (p[worst] - centroid));
    const double fc = fn(xc);
    ++evals;
    if (fc < std::min(fr, v[worst])) {
      p[worst] = xc, v[worst] = fc;
      continue;
    }
    for (int i = 0; i < 4; ++i) {
      if (i == best) continue;
      p[i] = p[best] + 0.5 * (p[i] - p[best]);
      v[i] = fn(p[i]);
      ++evals;
    }
  }
  const auto it = std::min_element(v.begin(), v.end());
  return {*it, p[static_cast<std::size_t>(it - v.begin())]};
}

OptimalityGap search_so2(const Eigen::MatrixXd& f, const SoSearchOptions& options) {
  const double two_pi = 2.0 * std::numbers::pi;
  const auto objective = [&](double theta) { return sym_log_objective(rotation2(theta), f); };
  const int grid = std::max(options.grid, 8);
  const double h = two_pi / grid;

  double best_theta = 0.0;
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < grid; ++i) {
    const double theta = -std::numbers::pi + i * h;
    const double value = objective(theta);
    if (value < best) best = value, best_theta = theta;
  }
  if (!std::isfinite(best)) throw Error(ErrorCode::kSearchFailure, "every rotation sample was infeasible");

  double a = best_theta - h, b = best_theta + h;
  const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - ratio * (b - a), d = a + ratio * (b - a);
  double fc = objective(c), fd = objective(d);
  while (b - a > 1e-12) {
    if (fc < fd) {
      b = d, d = c, fd = fc;
      c = b - ratio * (b - a);
      fc = objective(c);
    } else {
      a = c, c = d, fc = fd;
      d = a + ratio * (b - a);
      fd = objective(d);
    }
  }
  const double theta = 0.5 * (a + b);
  const double refined = objective(theta);
  OptimalityGap out;
  if (refined < best) {
    out.min_value = refined;
    out.minimizer = rotation2(theta);
  } else {
    out.min_value = best;
    out.minimizer = rotation2(best_theta);
  }
  return out;
}

OptimalityGap search_so3(const Eigen::MatrixXd& f, const SoSearchOptions& options) {
  std::mt19937_64 rng(options.seed);
  OptimalityGap out;
  out.min_value = std::numeric_limits<double>::infinity();

  for (int start = 0; start <= std::max(options.restarts, 0); ++start) {
    Eigen::Matrix3d base = start == 0 ? Eigen::Matrix3d::Identity() : random_rotation3(rng);
    double size = 0.3;
    Minimum m{std::numeric_limits<double>::infinity(), Eigen::Vector3d::Zero()};
    // Re-centre the chart on the current best rotation and shrink the simplex.
    for (int round = 0; round < 3; ++round) {
      const auto fn = [&](const Eigen::Vector3d& w) {
        return sym_log_objective(base * rotation3(w), f);
      };
      m = nelder_mead(fn, Eigen::Vector3d::Zero(), size, 1500);
      if (!std::isfinite(m.value)) break;
      base = base * rotation3(m.point);
      size *= 0.05;
    }
    if (m.value < out.min_value) {
      out.min_value = m.value;
      out.minimizer = base;
    }
  }
  if (!std::isfinite(out.min_value)) throw Error(ErrorCode::kSearchFailure, "every rotation sample was infeasible");
  return out;
}

}  // namespace

DeformationGradient::DeformationGradient(const Eigen::MatrixXd& f) : f_(f) {
  if (f.rows() != f.cols() || f.rows() == 0) throw Error(ErrorCode::kDimensionMismatch, "F must be square");
  if (!f.allFinite() || !(f.determinant() > 0.0)) {
    throw Error(ErrorCode::kNonPositiveDeterminant, "det F must be positive");
  }
}

HenckyParams HenckyParams::lame(double mu, double lambda) {
  if (!(mu > 0.0) || !(3.0 * lambda + 2.0 * mu >= 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "need mu > 0 and 3 lambda + 2 mu >= 0");
  }
  return HenckyParams(mu, LameLambda{lambda});
}

HenckyParams HenckyParams::bulk(double mu, double kappa) {
  if (!(mu > 0.0) || !(kappa >= 0.0)) throw Error(ErrorCode::kInvalidArgument, "need mu > 0 and kappa >= 0");
  return HenckyParams(mu, BulkKappa{kappa});
}

std::vector<double> spd_invariants(const SpdMatrix& u) { return elementary_symmetric(spectrum(u)); }

Eigen::MatrixXd matrix_log_spd(const SpdMatrix& u) { return u.log(); }

SpdMatrix right_stretch(const DeformationGradient& f) {
  return SpdMatrix(f.matrix().transpose() * f.matrix()).sqrt();
}

double hencky_energy(const DeformationGradient& f, const HenckyParams& p) {
  const Eigen::MatrixXd l = log_stretch(f);
  const double tr = l.trace();
  const double n = static_cast<double>(l.rows());
  if (const auto* lame = std::get_if<LameLambda>(&p.second())) {
    return p.mu() * l.squaredNorm() + 0.5 * lame->value * tr * tr;
  }
  const double kappa = std::get<BulkKappa>(p.second()).value;
  const Eigen::MatrixXd dev = l - (tr / n) * Eigen::MatrixXd::Identity(l.rows(), l.cols());
  return p.mu() * dev.squaredNorm() + 0.5 * kappa * tr * tr;
}

double becker_energy(const SpdMatrix& u) {
  double w = 0.0;
  for (double lam : u.eigenvalues()) w += lam * (std::log(lam) - 1.0);
  return w;
}

double becker_energy(const DeformationGradient& f) { return becker_energy(right_stretch(f)); }

MatrixSsliReport verify_matrix_ssli(const SpdMatrix& u, const SpdMatrix& v, const ToleranceConfig& tol,
                                    const std::optional<HenckyParams>& params) {
  require_same_size(u.size(), v.size());
  MatrixSsliReport r;
  const std::vector<double> lu = spectrum(u), lv = spectrum(v);
  r.invariants_u = elementary_symmetric(lu);
  r.invariants_v = elementary_symmetric(lv);
  r.ssli.verdict = check_dominance(CoefficientVector(r.invariants_u), CoefficientVector(r.invariants_v), tol);
  r.ssli.f_x = f_squared_log(std::span<const double>(lu));
  r.ssli.f_y = f_squared_log(std::span<const double>(lv));
  r.ssli.margin = r.ssli.f_y - r.ssli.f_x;
  r.ssli.inequality_holds = r.ssli.margin >= -1e-9 * (1.0 + std::abs(r.ssli.f_x));
  if (params) {
    HenckyComparison h;
    h.w_u = hencky_energy(DeformationGradient(u.matrix()), *params);
    h.w_v = hencky_energy(DeformationGradient(v.matrix()), *params);
    h.ordered = h.w_u <= h.w_v + 1e-9;
    r.hencky = h;
  }
  return r;
}

Status BeckerReport::status() const noexcept {
  if (!verdict.dominated) return Status::kHypothesesUnmet;
  return inequality_holds ? Status::kHolds : Status::kViolation;
}

BeckerReport verify_becker_monotonicity(const SpdMatrix& u, const SpdMatrix& v, const ToleranceConfig& tol) {
  require_same_size(u.size(), v.size());
  BeckerReport r;
  r.invariants_u = spd_invariants(u);
  r.invariants_v = spd_invariants(v);
  r.verdict = check_entropy_dominance(CoefficientVector(r.invariants_u), CoefficientVector(r.invariants_v), tol);
  r.w_u = becker_energy(u);
  r.w_v = becker_energy(v);
  r.margin = r.w_u - r.w_v;
  r.inequality_holds = r.margin >= -1e-9;
  return r;
}

double von_neumann_entropy(const Eigen::MatrixXd& x) {
  if (x.rows() != x.cols() || x.rows() == 0 || !x.allFinite()) {
    throw Error(ErrorCode::kNotDensityMatrix, "density matrix must be square, finite and non-empty");
  }
  if ((x - x.transpose()).norm() > 1e-12 * std::max(1.0, x.norm())) {
    throw Error(ErrorCode::kNotDensityMatrix, "density matrix must be symmetric");
  }
  if (std::abs(x.trace() - 1.0) > 1e-9) throw Error(ErrorCode::kNotDensityMatrix, "trace must be 1");
  const SymmetricEigen eig = symmetric_eigen(symmetrize(x));
  double s = 0.0;
  for (double lam : eig.values) {
    if (lam < -1e-12) throw Error(ErrorCode::kNotDensityMatrix, "density matrix has a negative eigenvalue");
    if (lam > 0.0) s -= lam * std::log(lam);
  }
  return s;
}

SpdMatrix geodesic_point(const SpdMatrix& c1, const SpdMatrix& c2, double t) {
  require_same_size(c1.size(), c2.size());
  if (!(t >= 0.0 && t <= 1.0)) throw Error(ErrorCode::kInvalidArgument, "t must lie in [0, 1]");
  const SpdMatrix half = c1.sqrt();
  const Eigen::MatrixXd inv_half = c1.inverse_sqrt().matrix();
  const SpdMatrix inner(symmetrize(inv_half * c2.matrix() * inv_half));
  return SpdMatrix(symmetrize(half.matrix() * inner.power(t).matrix() * half.matrix()));
}

double geodesic_distance(const SpdMatrix& c1, const SpdMatrix& c2) {
  require_same_size(c1.size(), c2.size());
  const Eigen::MatrixXd inv_half = c2.inverse_sqrt().matrix();
  const SpdMatrix inner(symmetrize(inv_half * c1.matrix() * inv_half));
  double sum = 0.0;
  for (double lam : inner.eigenvalues()) sum += std::log(lam) * std::log(lam);
  return std::sqrt(sum);
}

double log_euclidean_distance(const SpdMatrix& c1, const SpdMatrix& c2) {
  require_same_size(c1.size(), c2.size());
  return (c1.log() - c2.log()).norm();
}

PolarDecomposition polar_stretch(const DeformationGradient& f) {
  SpdMatrix u = right_stretch(f);
  Eigen::MatrixXd r = f.matrix() * u.power(-1.0).matrix();
  return {std::move(r), std::move(u)};
}

OptimalityGap so_n_optimality_gap(const DeformationGradient& f, const SoSearchOptions& options) {
  const Eigen::Index n = f.size();
  if (n != 2 && n != 3) throw Error(ErrorCode::kUnsupportedDimension, "rotation search supports n = 2 or 3");
  OptimalityGap out = n == 2 ? search_so2(f.matrix(), options) : search_so3(f.matrix(), options);
  out.reference = log_stretch(f).squaredNorm();
  out.gap = out.min_value - out.reference;
  return out;
}

KelloggReport kellogg_sector_check(const Eigen::MatrixXcd& x, double tol) {
  if (x.rows() != x.cols() || x.rows() == 0) throw Error(ErrorCode::kDimensionMismatch, "matrix must be square");
  const Eigen::Index n = x.rows();
  const int ni = static_cast<int>(n);

  // Faddeev-LeVerrier: M_k = X M_{k-1} + c_{k-1} I, c_k = -tr(X M_k) / k.
  std::vector<Complex> c(static_cast<std::size_t>(n) + 1);
  c[0] = 1.0;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(n, n);
  for (Eigen::Index k = 1; k <= n; ++k) {
    m = x * m + c[static_cast<std::size_t>(k - 1)] * id;
    c[static_cast<std::size_t>(k)] = -(x * m).trace() / static_cast<double>(k);
  }

  KelloggReport r;
  r.invariants_nonneg = true;
  const double norm = std::max(1.0, x.norm());
  for (int k = 1; k <= ni; ++k) {
    const Complex ik = (k % 2 == 0 ? 1.0 : -1.0) * c[static_cast<std::size_t>(k)];
    r.invariants.push_back(ik);
    // Rounding floor of the recurrence, not the user tolerance.
    const double slack = 1e-12 * binomial(ni, k) * std::pow(norm, k);
    if (std::abs(ik.imag()) > slack || ik.real() < -slack) r.invariants_nonneg = false;
  }

  r.eigenvalues = polynomial_roots(c);
  const double edge = std::numbers::pi - std::numbers::pi / static_cast<double>(n);
  r.all_in_sector = true;
  for (std::size_t i = 0; i < r.eigenvalues.size(); ++i) {
    const Complex z = r.eigenvalues[i];
    const double arg = std::abs(z) == 0.0 ? 0.0 : std::abs(std::arg(z));
    if (arg > edge + tol) r.all_in_sector = false;
    if (std::abs(arg - edge) <= 1e-6) r.boundary.push_back(i);
  }
  return r;
}

Eigen::MatrixXd companion_matrix(const MonicPolynomial& p) {
  const auto n = static_cast<Eigen::Index>(p.degree());
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j) c(0, j) = -p[static_cast<std::size_t>(j + 1)];
  for (Eigen::Index i = 1; i < n; ++i) c(i, i - 1) = 1.0;
  return c;
}

}  // namespace ssli
