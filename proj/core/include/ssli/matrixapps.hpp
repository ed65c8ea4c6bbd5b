#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "ssli/dominance.hpp"
#include "ssli/linalg.hpp"
#include "ssli/rootmap.hpp"
#include "ssli/tolerance.hpp"

namespace ssli {

/// Square real matrix with det > 0.
class DeformationGradient {
 public:
  /// Throws NonPositiveDeterminant (or DimensionMismatch if not square).
  explicit DeformationGradient(const Eigen::MatrixXd& f);

  Eigen::Index size() const noexcept { return f_.rows(); }
  const Eigen::MatrixXd& matrix() const noexcept { return f_; }

 private:
  Eigen::MatrixXd f_;
};

struct LameLambda {
  double value;
};
struct BulkKappa {
  double value;
};

/// Shear modulus plus either the second Lame constant or the bulk modulus.
/// For dimension n the two forms coincide when kappa = lambda + 2 mu / n.
class HenckyParams {
 public:
  /// mu > 0 and 3 lambda + 2 mu >= 0.
  static HenckyParams lame(double mu, double lambda);
  /// mu > 0 and kappa >= 0.
  static HenckyParams bulk(double mu, double kappa);

  double mu() const noexcept { return mu_; }
  const std::variant<LameLambda, BulkKappa>& second() const noexcept { return second_; }

 private:
  HenckyParams(double mu, std::variant<LameLambda, BulkKappa> second) : mu_(mu), second_(second) {}

  double mu_;
  std::variant<LameLambda, BulkKappa> second_;
};

/// (I_1, ..., I_n): elementary symmetric polynomials of the spectrum.
std::vector<double> spd_invariants(const SpdMatrix& u);

Eigen::MatrixXd matrix_log_spd(const SpdMatrix& u);

/// sqrt(F^T F).
SpdMatrix right_stretch(const DeformationGradient& f);

double hencky_energy(const DeformationGradient& f, const HenckyParams& p);

/// <U, log U - 1> with U = sqrt(F^T F).
double becker_energy(const DeformationGradient& f);
double becker_energy(const SpdMatrix& u);

struct HenckyComparison {
  double w_u = 0.0;
  double w_v = 0.0;
  bool ordered = false;  // w_u <= w_v + 1e-9
};

struct MatrixSsliReport {
  SsliReport ssli;  // f_x = ||log U||^2, f_y = ||log V||^2
  std::vector<double> invariants_u;
  std::vector<double> invariants_v;
  std::optional<HenckyComparison> hencky;
};

/// Dominance of the invariants of U by those of V (det pinned), then
/// ||log U||^2 <= ||log V||^2. U and V are read as right stretch tensors
/// when `params` asks for the energy comparison.
MatrixSsliReport verify_matrix_ssli(const SpdMatrix& u, const SpdMatrix& v, const ToleranceConfig& tol = {},
                                    const std::optional<HenckyParams>& params = std::nullopt);

struct BeckerReport {
  EntropyVerdict verdict;  // trace pinned, I_k for k >= 2
  double w_u = 0.0;
  double w_v = 0.0;
  double margin = 0.0;  // w_u - w_v
  bool inequality_holds = false;
  std::vector<double> invariants_u;
  std::vector<double> invariants_v;

  Status status() const noexcept;
};

/// Same trace and I_k(U) <= I_k(V) for k >= 2 imply W_B(U) >= W_B(V).
BeckerReport verify_becker_monotonicity(const SpdMatrix& u, const SpdMatrix& v, const ToleranceConfig& tol = {});

/// -sum lambda log lambda, 0 log 0 = 0. X symmetric, eigenvalues >= -1e-12
/// and |tr X - 1| <= 1e-9, else NotDensityMatrix.
double von_neumann_entropy(const Eigen::MatrixXd& x);

/// C1^{1/2} (C1^{-1/2} C2 C1^{-1/2})^t C1^{1/2}.
SpdMatrix geodesic_point(const SpdMatrix& c1, const SpdMatrix& c2, double t);
/// ||log(C2^{-1/2} C1 C2^{-1/2})||_F.
double geodesic_distance(const SpdMatrix& c1, const SpdMatrix& c2);
/// ||log C1 - log C2||_F.
double log_euclidean_distance(const SpdMatrix& c1, const SpdMatrix& c2);

struct PolarDecomposition {
  Eigen::MatrixXd rotation;
  SpdMatrix stretch;
};

/// F = R U with R in SO(n).
PolarDecomposition polar_stretch(const DeformationGradient& f);

struct SoSearchOptions {
  int grid = 720;      // angle samples, n = 2
  int restarts = 24;   // random starts besides the identity, n = 3
  std::uint64_t seed = 0x5eedULL;
};

struct OptimalityGap {
  double min_value = 0.0;
  double reference = 0.0;  // ||log sqrt(F^T F)||^2
  double gap = 0.0;        // min_value - reference
  Eigen::MatrixXd minimizer;
};

/// min over Q in SO(n) of ||sym log(Q^T F)||^2 with the principal log. Q for
/// which Q^T F has an eigenvalue on (-inf, 0] are skipped. n in {2, 3}.
OptimalityGap so_n_optimality_gap(const DeformationGradient& f, const SoSearchOptions& options = {});

struct KelloggReport {
  std::vector<Complex> invariants;  // I_k from the characteristic polynomial
  bool invariants_nonneg = false;
  ComplexVector eigenvalues;
  bool all_in_sector = false;      // |arg z| <= pi - pi/n + tol for every eigenvalue
  std::vector<std::size_t> boundary;  // indices with |arg z| within 1e-6 of the sector edge
};

/// Spectral sector test. all_in_sector is evaluated regardless of
/// invariants_nonneg; the theorem only speaks when the latter holds.
KelloggReport kellogg_sector_check(const Eigen::MatrixXcd& x, double tol = 1e-8);

/// Companion matrix whose characteristic polynomial is p.
Eigen::MatrixXd companion_matrix(const MonicPolynomial& p);

}  // namespace ssli
