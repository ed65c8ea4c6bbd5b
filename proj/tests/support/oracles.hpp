#pragma once

// Test-only reference computations. Nothing here calls into the code under
// test except for input types.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

namespace ssli::testing {

using Cplx = std::complex<double>;

/// e_k by enumerating all k-subsets (bitmasks); n <= 20.
template <class T>
std::vector<T> brute_elementary(const std::vector<T>& x) {
  const std::size_t n = x.size();
  std::vector<T> e(n, T{0});
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    T prod{1};
    int bits = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) {
        prod *= x[i];
        ++bits;
      }
    }
    e[static_cast<std::size_t>(bits - 1)] += prod;
  }
  return e;
}

/// Roots of t^n - e_1 t^{n-1} + ... via Eigen's eigensolver on a companion matrix.
inline std::vector<Cplx> companion_roots(const std::vector<double>& e) {
  const auto n = static_cast<Eigen::Index>(e.size());
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j) c(0, j) = ((j % 2 == 0) ? 1.0 : -1.0) * e[static_cast<std::size_t>(j)];
  for (Eigen::Index i = 1; i < n; ++i) c(i, i - 1) = 1.0;
  Eigen::EigenSolver<Eigen::MatrixXd> es(c);
  std::vector<Cplx> out;
  for (Eigen::Index i = 0; i < n; ++i) out.push_back(es.eigenvalues()(i));
  return out;
}

/// d f / d e_k through the implicit function theorem: J_{k,i} = d e_k / d z_i
/// = e_{k-1}(z without z_i); df/dz_i = 2 log z_i / z_i; solve grad_e^T J = grad_z.
inline double implicit_df_de(const std::vector<Cplx>& z, int k) {
  const auto n = static_cast<Eigen::Index>(z.size());
  Eigen::MatrixXcd jac(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    std::vector<Cplx> rest;
    for (Eigen::Index j = 0; j < n; ++j)
      if (j != i) rest.push_back(z[static_cast<std::size_t>(j)]);
    const std::vector<Cplx> er = rest.empty() ? std::vector<Cplx>{} : brute_elementary(rest);
    for (Eigen::Index row = 0; row < n; ++row) {
      jac(row, i) = row == 0 ? Cplx(1.0) : er[static_cast<std::size_t>(row - 1)];
    }
  }
  Eigen::VectorXcd grad_z(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Cplx zi = z[static_cast<std::size_t>(i)];
    grad_z(i) = 2.0 * std::log(zi) / zi;
  }
  // grad_z^T = grad_e^T J  =>  J^T grad_e = grad_z.
  const Eigen::VectorXcd grad_e = jac.transpose().fullPivLu().solve(grad_z);
  return grad_e(k - 1).real();
}

inline double sum_log_squared(const std::vector<double>& x) {
  double s = 0.0;
  for (double v : x) s += std::log(v) * std::log(v);
  return s;
}

inline std::vector<double> log_uniform_vector(std::mt19937_64& rng, std::size_t n, double lo, double hi) {
  std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
  std::vector<double> x(n);
  for (double& v : x) v = std::exp(u(rng));
  return x;
}

/// Haar-ish rotation: QR of a Gaussian matrix with sign-fixed diagonal, det +1.
inline Eigen::MatrixXd random_rotation(std::mt19937_64& rng, Eigen::Index n) {
  std::normal_distribution<double> g(0.0, 1.0);
  Eigen::MatrixXd a(n, n);
  for (Eigen::Index i = 0; i < a.size(); ++i) a.data()[i] = g(rng);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
  Eigen::MatrixXd q = qr.householderQ();
  const Eigen::MatrixXd r = qr.matrixQR();
  for (Eigen::Index i = 0; i < n; ++i)
    if (r(i, i) < 0) q.col(i) *= -1.0;
  if (q.determinant() < 0) q.col(0) *= -1.0;
  return q;
}

inline Eigen::MatrixXd conjugate_diagonal(const Eigen::MatrixXd& q, const std::vector<double>& d) {
  const Eigen::VectorXd v = Eigen::Map<const Eigen::VectorXd>(d.data(), static_cast<Eigen::Index>(d.size()));
  Eigen::MatrixXd m = q * v.asDiagonal() * q.transpose();
  return 0.5 * (m + m.transpose());
}

inline Eigen::MatrixXd random_spd(std::mt19937_64& rng, Eigen::Index n) {
  return conjugate_diagonal(random_rotation(rng, n), log_uniform_vector(rng, static_cast<std::size_t>(n), 0.2, 5.0));
}

/// F = R diag(s) R' with positive s: a random element of GL+(n).
inline Eigen::MatrixXd random_deformation(std::mt19937_64& rng, Eigen::Index n) {
  const std::vector<double> s = log_uniform_vector(rng, static_cast<std::size_t>(n), 0.3, 3.0);
  const Eigen::VectorXd v = Eigen::Map<const Eigen::VectorXd>(s.data(), n);
  return random_rotation(rng, n) * v.asDiagonal() * random_rotation(rng, n);
}

}  // namespace ssli::testing
