#pragma once

namespace ssli {

/// Numeric thresholds shared by every module. All values are dimensionless
/// and relative unless noted.
struct ToleranceConfig {
  /// |Im z| below pairing_tol * (1 + |z|) snaps a root to the real axis.
  double pairing_tol = 1e-8;
  /// Minimum pairwise gap, relative to max(1, max|z_i|), for formulas that
  /// divide by root differences.
  double distinct_tol = 1e-9;
  /// A root cluster whose spread is within multiplicity_tol * (1 + |z|),
  /// judged from the Taylor coefficients at its centroid, is merged into one
  /// repeated root. An m-fold root is only resolved to ~eps^(1/m).
  double multiplicity_tol = 1e-6;
  /// Slack for the pinned equality constraint, scaled by (1 + e_pinned(x)).
  double equality_slack = 1e-9;
  double quad_abs_tol = 1e-13;
  double quad_rel_tol = 1e-11;
  /// Relative step for central finite differences.
  double fd_step = 1e-5;

  /// Throws Error(kInvalidArgument) unless every field is positive and
  /// fd_step < 1.
  void validate() const;
};

}  // namespace ssli
