#pragma once

#include <Eigen/Dense>
#include <functional>

namespace ssli {

/// Eigenpairs of a real symmetric matrix, eigenvalues in descending order
/// and orthonormal eigenvectors in matching columns.
struct SymmetricEigen {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;
};

/// Cyclic Jacobi rotations. Accurate to a few ulps of ||A|| for the small
/// matrices used here (n <= 16); input symmetry is assumed, not checked.
SymmetricEigen symmetric_eigen(const Eigen::MatrixXd& a);

/// V diag(f(lambda)) V^T.
Eigen::MatrixXd spectral_apply(const SymmetricEigen& eig, const std::function<double(double)>& f);

/// Symmetric positive definite matrix with its eigendecomposition cached at
/// construction.
class SpdMatrix {
 public:
  /// Throws NotSymmetricPositiveDefinite if ||A - A^T|| > 1e-12 ||A|| or an
  /// eigenvalue is <= 0. Stores the symmetrized matrix.
  explicit SpdMatrix(const Eigen::MatrixXd& a);

  Eigen::Index size() const noexcept { return matrix_.rows(); }
  const Eigen::MatrixXd& matrix() const noexcept { return matrix_; }
  const Eigen::VectorXd& eigenvalues() const noexcept { return eig_.values; }
  const Eigen::MatrixXd& eigenvectors() const noexcept { return eig_.vectors; }

  /// Principal logarithm, symmetric.
  Eigen::MatrixXd log() const;
  SpdMatrix sqrt() const { return power(0.5); }
  SpdMatrix inverse_sqrt() const { return power(-0.5); }
  SpdMatrix power(double t) const;

 private:
  SpdMatrix(Eigen::MatrixXd a, SymmetricEigen eig);

  Eigen::MatrixXd matrix_;
  SymmetricEigen eig_;
};

}  // namespace ssli
