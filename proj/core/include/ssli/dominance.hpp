#pragma once

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "ssli/rootmap.hpp"
#include "ssli/symfun.hpp"
#include "ssli/tolerance.hpp"

namespace ssli {

/// Hypotheses of the squared-logarithm inequality for a pair (x, y):
/// e_k(x) <= e_k(y) for k < n and e_n(x) == e_n(y).
struct DominanceVerdict {
  std::vector<double> per_k_slack;  // e_k(y) - e_k(x), k = 1..n-1
  double last_gap = 0.0;            // |e_n(x) - e_n(y)|
  double allowed_slack = 0.0;       // equality_slack * (1 + e_n(x))
  bool dominated = false;
};

/// Hypotheses of the entropy variant: e_1(x) == e_1(y) and e_k(x) <= e_k(y)
/// for k = 2..n.
struct EntropyVerdict {
  std::vector<double> per_k_slack;  // e_k(y) - e_k(x), k = 2..n
  double first_gap = 0.0;           // |e_1(x) - e_1(y)|
  double allowed_slack = 0.0;       // equality_slack * (1 + e_1(x))
  bool dominated = false;
};

enum class Status { kHolds, kHypothesesUnmet, kViolation };
std::string_view to_string(Status status);

struct SsliReport {
  DominanceVerdict verdict;
  double f_x = 0.0;
  double f_y = 0.0;
  double margin = 0.0;  // f_y - f_x
  bool inequality_holds = false;

  /// kViolation is reserved for a dominated pair whose inequality fails.
  Status status() const noexcept;
};

struct EntropyReport {
  EntropyVerdict verdict;
  double g_x = 0.0;
  double g_y = 0.0;
  double margin = 0.0;  // g_y - g_x
  bool inequality_holds = false;

  Status status() const noexcept;
};

DominanceVerdict check_dominance(const PositiveVector& x, const PositiveVector& y, const ToleranceConfig& tol = {});
/// Same verdict computed directly from coefficient vectors.
DominanceVerdict check_dominance(const CoefficientVector& ex, const CoefficientVector& ey,
                                 const ToleranceConfig& tol = {});
EntropyVerdict check_entropy_dominance(const CoefficientVector& ex, const CoefficientVector& ey,
                                       const ToleranceConfig& tol = {});

/// inequality_holds <=> f_y - f_x >= -1e-9 * (1 + |f_x|).
SsliReport verify_ssli(const PositiveVector& x, const PositiveVector& y, const ToleranceConfig& tol = {});
/// inequality_holds <=> g_x <= g_y + 1e-9.
EntropyReport verify_entropy_dominance(const PositiveVector& x, const PositiveVector& y,
                                       const ToleranceConfig& tol = {});

struct PathSample {
  double s = 0.0;
  std::vector<double> e;  // (1 - s) e(x) + s e(y)
  OrderedRootVector roots;
  double f_value = 0.0;
  double discriminant = 0.0;
};

struct PathTrace {
  std::vector<PathSample> samples;
  std::vector<double> degenerate_s;
  bool all_degenerate = false;
  /// f(s_{i+1}) >= f(s_i) - 1e-9 at every step.
  bool monotone = true;
  double max_drop = 0.0;
};

/// Follows the straight coefficient path from e(x) to e(y) through phi.
/// Throws NotDominated unless (x, y) satisfies the hypotheses.
PathTrace trace_path(const PositiveVector& x, const PositiveVector& y, int samples, const ToleranceConfig& tol = {});

/// Splits exactly equal components pairwise (left to right): x_i -> x_i(1+eps),
/// x_j -> x_j/(1+eps). A leftover odd occurrence stays untouched. The product
/// is preserved and f grows by 2 m (log(1+eps))^2 for m split pairs.
PositiveVector split_equal_pairs(const PositiveVector& x, double eps);

struct DominatedPair {
  PositiveVector x;
  PositiveVector y;
  double spread_used;
  int attempts;
};

/// x log-uniform in (0.1, 10)^n; e(y) = e(x) + (d_1, ..., d_{n-1}, 0) with
/// d_k = spread * U(0,1) * e_k(x). Rejects until phi(e(y)) is real and
/// positive and the recovered pair passes check_dominance, halving spread
/// after each rejection. Deterministic per seed.
DominatedPair random_dominated_pair(int n, std::uint64_t seed, double spread, const ToleranceConfig& tol = {});

/// Entropy variant: e_1 pinned, d_k on k = 2..n.
DominatedPair random_entropy_pair(int n, std::uint64_t seed, double spread, const ToleranceConfig& tol = {});

}  // namespace ssli
