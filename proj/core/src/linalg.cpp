#include "ssli/linalg.hpp"

#include <cmath>
#include <numeric>
#include <vector>

#include "ssli/errors.hpp"

namespace ssli {

namespace {

void sort_descending(SymmetricEigen& eig) {
  const Eigen::Index n = eig.values.size();
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index a, Eigen::Index b) { return eig.values(a) > eig.values(b); });
  SymmetricEigen sorted{Eigen::VectorXd(n), Eigen::MatrixXd(n, n)};
  for (Eigen::Index i = 0; i < n; ++i) {
    sorted.values(i) = eig.values(order[static_cast<std::size_t>(i)]);
    sorted.vectors.col(i) = eig.vectors.col(order[static_cast<std::size_t>(i)]);
  }
  eig = std::move(sorted);
}

}  // namespace

SymmetricEigen symmetric_eigen(const Eigen::MatrixXd& input) {
  const Eigen::Index n = input.rows();
  Eigen::MatrixXd a = input;
  Eigen::MatrixXd v = Eigen::MatrixXd::Identity(n, n);
  const double norm = a.norm();

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (Eigen::Index p = 0; p < n; ++p)
      for (Eigen::Index q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
    if (std::sqrt(off) <= 1e-17 * norm || off == 0.0) break;

    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (Eigen::Index k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }
  SymmetricEigen eig{a.diagonal(), v};
  sort_descending(eig);
  return eig;
}

Eigen::MatrixXd spectral_apply(const SymmetricEigen& eig, const std::function<double(double)>& f) {
  Eigen::VectorXd mapped = eig.values.unaryExpr(f);
  Eigen::MatrixXd out = eig.vectors * mapped.asDiagonal() * eig.vectors.transpose();
  return 0.5 * (out + out.transpose());
}

SpdMatrix::SpdMatrix(const Eigen::MatrixXd& a) {
  if (a.rows() != a.cols() || a.rows() == 0) {
    throw Error(ErrorCode::kNotSymmetricPositiveDefinite, "matrix must be square and non-empty");
  }
  if (!a.allFinite() || (a - a.transpose()).norm() > 1e-12 * a.norm()) {
    throw Error(ErrorCode::kNotSymmetricPositiveDefinite, "matrix is not symmetric");
  }
  matrix_ = 0.5 * (a + a.transpose());
  eig_ = symmetric_eigen(matrix_);
  if (!(eig_.values.minCoeff() > 0.0)) {
    throw Error(ErrorCode::kNotSymmetricPositiveDefinite, "matrix has a non-positive eigenvalue");
  }
}

SpdMatrix::SpdMatrix(Eigen::MatrixXd a, SymmetricEigen eig) : matrix_(std::move(a)), eig_(std::move(eig)) {
  sort_descending(eig_);
}

Eigen::MatrixXd SpdMatrix::log() const {
  return spectral_apply(eig_, [](double x) { return std::log(x); });
}

SpdMatrix SpdMatrix::power(double t) const {
  SymmetricEigen mapped{eig_.values.unaryExpr([t](double x) { return std::pow(x, t); }), eig_.vectors};
  Eigen::MatrixXd m = spectral_apply(mapped, [](double x) { return x; });
  return SpdMatrix(std::move(m), std::move(mapped));
}

}  // namespace ssli
