#include "ssli/dominance.hpp"

#include <cmath>
#include <random>
#include <string>

#include "ssli/errors.hpp"
#include "ssli/logfun.hpp"

namespace ssli {

namespace {

void require_same_size(std::size_t a, std::size_t b) {
  if (a != b) throw Error(ErrorCode::kDimensionMismatch, std::to_string(a) + " vs " + std::to_string(b));
}

constexpr int kGenerationBudget = 64;

// Shared rejection loop; `pinned` is the 1-based coefficient held fixed.
DominatedPair generate_pair(int n, std::uint64_t seed, double spread, std::size_t pinned, const ToleranceConfig& tol) {
  if (n < 2) throw Error(ErrorCode::kInvalidArgument, "n must be >= 2");
  if (spread < 0.0) throw Error(ErrorCode::kInvalidArgument, "spread must be >= 0");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> log_uniform(std::log(0.1), std::log(10.0));
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  std::vector<double> xs(static_cast<std::size_t>(n));
  for (auto& v : xs) v = std::exp(log_uniform(rng));
  PositiveVector x(xs);
  if (spread == 0.0) return {x, x, 0.0, 1};

  const std::vector<double> ex = elementary_symmetric(x.values());
  double current = spread;
  for (int attempt = 1; attempt <= kGenerationBudget; ++attempt) {
    std::vector<double> ey = ex;
    for (std::size_t k = 1; k <= ey.size(); ++k) {
      if (k != pinned) ey[k - 1] += current * unit(rng) * ex[k - 1];
    }
    const OrderedRootVector roots = phi(CoefficientVector(ey), tol);
    if (roots.all_real()) {
      // Clustered roots are recovered only to ~1e-7, so the pinned
      // coefficient drifts. Rescaling y restores it to rounding level; the
      // remaining hypotheses are then re-checked.
      std::vector<double> ys = roots.real_parts();
      const std::vector<double> recovered = elementary_symmetric(std::span<const double>(ys));
      const double ratio = ex[pinned - 1] / recovered[pinned - 1];
      const double scale = std::pow(ratio, 1.0 / static_cast<double>(pinned));
      for (double& v : ys) v *= scale;
      PositiveVector y(std::move(ys));
      const CoefficientVector ex_c(ex), ey_c = coefficients_of(y);
      const bool ok = pinned == 1 ? check_entropy_dominance(ex_c, ey_c, tol).dominated
                                  : check_dominance(ex_c, ey_c, tol).dominated;
      if (ok) return {x, std::move(y), current, attempt};
    }
    current *= 0.5;
  }
  throw Error(ErrorCode::kGenerationFailure, "no real-rooted perturbation within the retry budget");
}

}  // namespace

std::string_view to_string(Status status) {
  switch (status) {
    case Status::kHolds: return "holds";
    case Status::kHypothesesUnmet: return "hypotheses_unmet";
    case Status::kViolation: return "violation";
  }
  return "unknown";
}

Status SsliReport::status() const noexcept {
  if (!verdict.dominated) return Status::kHypothesesUnmet;
  return inequality_holds ? Status::kHolds : Status::kViolation;
}

Status EntropyReport::status() const noexcept {
  if (!verdict.dominated) return Status::kHypothesesUnmet;
  return inequality_holds ? Status::kHolds : Status::kViolation;
}

DominanceVerdict check_dominance(const CoefficientVector& ex, const CoefficientVector& ey, const ToleranceConfig& tol) {
  require_same_size(ex.size(), ey.size());
  const std::size_t n = ex.size();
  DominanceVerdict v;
  v.allowed_slack = tol.equality_slack * (1.0 + ex.e(n));
  v.last_gap = std::abs(ex.e(n) - ey.e(n));
  v.dominated = v.last_gap <= v.allowed_slack;
  for (std::size_t k = 1; k < n; ++k) {
    v.per_k_slack.push_back(ey.e(k) - ex.e(k));
    if (v.per_k_slack.back() < -v.allowed_slack) v.dominated = false;
  }
  return v;
}

DominanceVerdict check_dominance(const PositiveVector& x, const PositiveVector& y, const ToleranceConfig& tol) {
  require_same_size(x.size(), y.size());
  return check_dominance(coefficients_of(x), coefficients_of(y), tol);
}

EntropyVerdict check_entropy_dominance(const CoefficientVector& ex, const CoefficientVector& ey,
                                       const ToleranceConfig& tol) {
  require_same_size(ex.size(), ey.size());
  EntropyVerdict v;
  v.allowed_slack = tol.equality_slack * (1.0 + ex.e(1));
  v.first_gap = std::abs(ex.e(1) - ey.e(1));
  v.dominated = v.first_gap <= v.allowed_slack;
  for (std::size_t k = 2; k <= ex.size(); ++k) {
    v.per_k_slack.push_back(ey.e(k) - ex.e(k));
    if (v.per_k_slack.back() < -v.allowed_slack) v.dominated = false;
  }
  return v;
}

SsliReport verify_ssli(const PositiveVector& x, const PositiveVector& y, const ToleranceConfig& tol) {
  SsliReport r;
  r.verdict = check_dominance(x, y, tol);
  r.f_x = f_squared_log(x.values());
  r.f_y = f_squared_log(y.values());
  r.margin = r.f_y - r.f_x;
  r.inequality_holds = r.margin >= -1e-9 * (1.0 + std::abs(r.f_x));
  return r;
}

EntropyReport verify_entropy_dominance(const PositiveVector& x, const PositiveVector& y, const ToleranceConfig& tol) {
  require_same_size(x.size(), y.size());
  EntropyReport r;
  r.verdict = check_entropy_dominance(coefficients_of(x), coefficients_of(y), tol);
  r.g_x = entropy_g(x.values());
  r.g_y = entropy_g(y.values());
  r.margin = r.g_y - r.g_x;
  r.inequality_holds = r.g_x <= r.g_y + 1e-9;
  return r;
}

PathTrace trace_path(const PositiveVector& x, const PositiveVector& y, int samples, const ToleranceConfig& tol) {
  if (samples < 2) throw Error(ErrorCode::kInvalidArgument, "samples must be >= 2");
  const CoefficientVector ex = coefficients_of(x);
  const CoefficientVector ey = coefficients_of(y);
  if (!check_dominance(ex, ey, tol).dominated) {
    throw Error(ErrorCode::kNotDominated, "path endpoints do not satisfy the dominance hypotheses");
  }

  PathTrace trace;
  trace.samples.reserve(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) {
    const double s = static_cast<double>(i) / static_cast<double>(samples - 1);
    const CoefficientVector es = interpolate(ex, ey, s);
    OrderedRootVector roots = phi(es, tol);
    const double f = f_squared_log(roots).value;
    const double d = es.size() >= 2 ? discriminant(build_char_poly(es)) : 0.0;
    trace.samples.push_back({s, es.vector(), std::move(roots), f, d});
  }
  for (std::size_t i = 1; i < trace.samples.size(); ++i) {
    const double drop = trace.samples[i - 1].f_value - trace.samples[i].f_value;
    trace.max_drop = std::max(trace.max_drop, drop);
  }
  trace.monotone = trace.max_drop <= 1e-9;

  const DegeneracyScan scan = segment_degeneracies(ex, ey, samples, tol);
  trace.all_degenerate = scan.all_degenerate;
  trace.degenerate_s = scan.s;
  return trace;
}

PositiveVector split_equal_pairs(const PositiveVector& x, double eps) {
  if (!(eps > 0.0)) throw Error(ErrorCode::kInvalidArgument, "eps must be > 0");
  std::vector<double> out = x.vector();
  std::vector<bool> used(out.size(), false);
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (used[i]) continue;
    for (std::size_t j = i + 1; j < out.size(); ++j) {
      if (!used[j] && x[j] == x[i]) {
        used[i] = used[j] = true;
        out[i] = x[i] * (1.0 + eps);
        out[j] = x[j] / (1.0 + eps);
        break;
      }
    }
  }
  return PositiveVector(std::move(out));
}

DominatedPair random_dominated_pair(int n, std::uint64_t seed, double spread, const ToleranceConfig& tol) {
  return generate_pair(n, seed, spread, static_cast<std::size_t>(n), tol);
}

DominatedPair random_entropy_pair(int n, std::uint64_t seed, double spread, const ToleranceConfig& tol) {
  return generate_pair(n, seed, spread, 1, tol);
}

}  // namespace ssli
