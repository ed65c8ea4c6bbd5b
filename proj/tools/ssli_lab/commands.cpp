#include "ssli_lab/commands.hpp"

#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ssli/ssli.hpp"
#include "ssli_lab/instance.hpp"

namespace ssli::lab {

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitViolation = 2;

struct ToleranceFlags {
  std::optional<double> pairing, distinct, multiplicity, equality, quad_abs, quad_rel, fd_step;

  void attach(CLI::App* app) {
    app->add_option("--tol-pairing", pairing, "conjugate pairing tolerance");
    app->add_option("--tol-distinct", distinct, "relative minimum root gap");
    app->add_option("--tol-multiplicity", multiplicity, "root cluster merge radius");
    app->add_option("--tol-equality", equality, "slack for the pinned coefficient");
    app->add_option("--tol-quad-abs", quad_abs, "absolute quadrature tolerance");
    app->add_option("--tol-quad-rel", quad_rel, "relative quadrature tolerance");
    app->add_option("--tol-fd-step", fd_step, "relative finite-difference step");
  }

  void apply(ToleranceConfig& tol) const {
    if (pairing) tol.pairing_tol = *pairing;
    if (distinct) tol.distinct_tol = *distinct;
    if (multiplicity) tol.multiplicity_tol = *multiplicity;
    if (equality) tol.equality_slack = *equality;
    if (quad_abs) tol.quad_abs_tol = *quad_abs;
    if (quad_rel) tol.quad_rel_tol = *quad_rel;
    if (fd_step) tol.fd_step = *fd_step;
  }
};

// Defaults < instance file < command line.
ToleranceConfig resolve_tolerances(const std::string& instance_path, const ToleranceFlags& flags,
                                   std::optional<Instance>& instance) {
  ToleranceConfig tol;
  if (!instance_path.empty()) instance = load_instance(instance_path, tol);
  flags.apply(tol);
  tol.validate();
  return tol;
}

int exit_code(Status s) { return s == Status::kViolation ? kExitViolation : kExitOk; }

json to_json(const Eigen::MatrixXd& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(std::span<const Complex> z) {
  json out = json::array();
  for (const Complex& c : z) out.push_back({c.real(), c.imag()});
  return out;
}

json to_json(const DominanceVerdict& v) {
  return {{"dominated", v.dominated},
          {"per_k_slack", v.per_k_slack},
          {"last_gap", v.last_gap},
          {"allowed_slack", v.allowed_slack}};
}

json to_json(const EntropyVerdict& v) {
  return {{"dominated", v.dominated},
          {"per_k_slack", v.per_k_slack},
          {"first_gap", v.first_gap},
          {"allowed_slack", v.allowed_slack}};
}

std::string format17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void emit(std::ostream& out, const json& report) { out << report.dump(2) << '\n'; }

const Instance& require_instance(const std::optional<Instance>& inst) {
  if (!inst) throw InputError("--instance is required");
  return *inst;
}

const std::vector<double>& require_y(const Instance& inst) {
  if (!inst.y) throw InputError("instance needs both members of the pair");
  return *inst.y;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::string instance;
  std::string mode = "ssli";
  std::optional<double> mu, lambda, kappa;
  ToleranceFlags tol;
};

std::optional<HenckyParams> hencky_params(const std::optional<double>& mu, const std::optional<double>& lambda,
                                          const std::optional<double>& kappa, bool required) {
  if (!mu && !lambda && !kappa && !required) return std::nullopt;
  if (!mu) throw InputError("--mu is required for Hencky energies");
  if (lambda.has_value() == kappa.has_value()) throw InputError("give exactly one of --lambda or --kappa");
  return lambda ? HenckyParams::lame(*mu, *lambda) : HenckyParams::bulk(*mu, *kappa);
}

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  std::optional<Instance> loaded;
  const ToleranceConfig tol = resolve_tolerances(args.instance, args.tol, loaded);
  const Instance& inst = require_instance(loaded);

  json report{{"command", "verify"}, {"mode", args.mode}, {"instance", inst.document},
              {"tolerances", tolerances_to_json(tol)}};
  Status status = Status::kHolds;
  const bool is_matrix = inst.kind == InstanceKind::kMatrices;

  if (args.mode == "ssli" || args.mode == "entropy") {
    if (is_matrix) throw InputError("mode " + args.mode + " needs a vector or coefficient instance");
    const std::vector<double>& y = require_y(inst);
    const bool coeffs = inst.kind == InstanceKind::kCoefficients;
    const CoefficientVector ex = coeffs ? CoefficientVector(inst.x) : coefficients_of(PositiveVector(inst.x));
    const CoefficientVector ey = coeffs ? CoefficientVector(y) : coefficients_of(PositiveVector(y));

    if (args.mode == "ssli") {
      SsliReport r;
      if (coeffs) {
        r.verdict = check_dominance(ex, ey, tol);
        r.f_x = f_squared_log(phi(ex, tol)).value;
        r.f_y = f_squared_log(phi(ey, tol)).value;
        r.margin = r.f_y - r.f_x;
        r.inequality_holds = r.margin >= -1e-9 * (1.0 + std::abs(r.f_x));
      } else {
        r = verify_ssli(PositiveVector(inst.x), PositiveVector(y), tol);
      }
      status = r.status();
      report["verdict"] = to_json(r.verdict);
      report["values"] = {{"f_x", r.f_x}, {"f_y", r.f_y}, {"margin", r.margin},
                          {"per_k_slack", r.verdict.per_k_slack}, {"inequality_holds", r.inequality_holds}};
      err << "verify ssli: " << to_string(status) << " (f_x " << r.f_x << ", f_y " << r.f_y << ")\n";
    } else {
      EntropyReport r;
      if (coeffs) {
        r.verdict = check_entropy_dominance(ex, ey, tol);
        r.g_x = entropy_g(phi(ex, tol)).value;
        r.g_y = entropy_g(phi(ey, tol)).value;
        r.margin = r.g_y - r.g_x;
        r.inequality_holds = r.g_x <= r.g_y + 1e-9;
      } else {
        r = verify_entropy_dominance(PositiveVector(inst.x), PositiveVector(y), tol);
      }
      status = r.status();
      report["verdict"] = to_json(r.verdict);
      report["values"] = {{"g_x", r.g_x}, {"g_y", r.g_y}, {"margin", r.margin},
                          {"per_k_slack", r.verdict.per_k_slack}, {"inequality_holds", r.inequality_holds}};
      err << "verify entropy: " << to_string(status) << " (g_x " << r.g_x << ", g_y " << r.g_y << ")\n";
    }
  } else if (args.mode == "matrix" || args.mode == "becker") {
    if (!is_matrix) throw InputError("mode " + args.mode + " needs a matrix_u/matrix_v instance");
    if (!inst.v) throw InputError("instance needs both matrix_u and matrix_v");
    const SpdMatrix u(inst.u), v(*inst.v);
    if (args.mode == "matrix") {
      const MatrixSsliReport r = verify_matrix_ssli(u, v, tol, hencky_params(args.mu, args.lambda, args.kappa, false));
      status = r.ssli.status();
      report["verdict"] = to_json(r.ssli.verdict);
      report["values"] = {{"f_x", r.ssli.f_x}, {"f_y", r.ssli.f_y}, {"margin", r.ssli.margin},
                          {"per_k_slack", r.ssli.verdict.per_k_slack},
                          {"inequality_holds", r.ssli.inequality_holds},
                          {"invariants_u", r.invariants_u}, {"invariants_v", r.invariants_v}};
      if (r.hencky) {
        report["values"]["hencky"] = {{"w_u", r.hencky->w_u}, {"w_v", r.hencky->w_v}, {"ordered", r.hencky->ordered}};
      }
      err << "verify matrix: " << to_string(status) << " (||log U||^2 " << r.ssli.f_x << ", ||log V||^2 "
          << r.ssli.f_y << ")\n";
    } else {
      const BeckerReport r = verify_becker_monotonicity(u, v, tol);
      status = r.status();
      report["verdict"] = to_json(r.verdict);
      report["values"] = {{"w_u", r.w_u}, {"w_v", r.w_v}, {"margin", r.margin},
                          {"per_k_slack", r.verdict.per_k_slack}, {"inequality_holds", r.inequality_holds},
                          {"invariants_u", r.invariants_u}, {"invariants_v", r.invariants_v}};
      err << "verify becker: " << to_string(status) << " (W_B(U) " << r.w_u << ", W_B(V) " << r.w_v << ")\n";
    }
  } else {
    throw InputError("unknown mode \"" + args.mode + "\" (expected ssli, entropy, matrix or becker)");
  }

  report["status"] = to_string(status);
  emit(out, report);
  return exit_code(status);
}

// ------------------------------------------------------------ derivative

struct DerivativeArgs {
  std::string instance;
  std::string e;
  std::optional<int> k;
  std::string methods = "closed,integral,fd,contour";
  ToleranceFlags tol;
};

DerivativeMethods parse_methods(const std::string& text) {
  DerivativeMethods m{false, false, false, false};
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "closed") m.closed = true;
    else if (item == "integral") m.integral = true;
    else if (item == "fd") m.finite_difference = true;
    else if (item == "contour") m.contour = true;
    else throw InputError("unknown method \"" + item + "\" (expected closed, integral, fd, contour)");
  }
  if (!m.closed && !m.integral && !m.finite_difference && !m.contour) throw InputError("no methods selected");
  return m;
}

int cmd_derivative(const DerivativeArgs& args, std::ostream& out, std::ostream& err) {
  std::optional<Instance> loaded;
  const ToleranceConfig tol = resolve_tolerances(args.instance, args.tol, loaded);
  if (loaded.has_value() == !args.e.empty()) throw InputError("give exactly one of --e or --instance");

  std::optional<CoefficientVector> e;
  if (!args.e.empty()) {
    e.emplace(parse_number_list(args.e));
  } else if (loaded->kind == InstanceKind::kCoefficients) {
    e.emplace(loaded->x);
  } else if (loaded->kind == InstanceKind::kVectors) {
    e.emplace(coefficients_of(PositiveVector(loaded->x)));
  } else {
    throw InputError("derivative needs a coefficient or vector instance");
  }
  const int n = static_cast<int>(e->size());
  if (n < 2) throw InputError("derivatives need n >= 2");
  if (args.k && (*args.k < 1 || *args.k > n - 1)) throw InputError("--k must lie in 1..n-1");
  const DerivativeMethods methods = parse_methods(args.methods);

  json report{{"command", "derivative"}, {"e", e->vector()}, {"tolerances", tolerances_to_json(tol)}};
  if (loaded) report["instance"] = loaded->document;
  report["roots"] = to_json(phi(*e, tol).roots());

  json derivatives = json::array();
  Status status = Status::kHolds;
  double worst = 0.0;
  for (int k = args.k.value_or(1); k <= args.k.value_or(n - 1); ++k) {
    const DerivativeReport r = derivative_report(*e, k, methods, tol);
    json d{{"k", k}, {"max_pairwise_discrepancy", r.max_pairwise_discrepancy},
           {"closed_skipped_duplicate_roots", r.closed_skipped_duplicate_roots}};
    if (r.closed_form) d["closed"] = *r.closed_form;
    if (r.integral_form) d["integral"] = *r.integral_form;
    if (r.finite_difference) d["finite_difference"] = *r.finite_difference;
    if (r.contour_form) d["contour"] = *r.contour_form;
    if (r.closed_skipped_duplicate_roots) {
      err << "warning: repeated roots at k=" << k << "; closed form omitted\n";
    }
    // Positivity is checked on the integral form, the one defined at repeated roots.
    const std::optional<double> reference = r.integral_form ? r.integral_form : r.closed_form;
    if (reference && !(*reference > 0.0)) status = Status::kViolation;
    worst = std::max(worst, r.max_pairwise_discrepancy);
    derivatives.push_back(std::move(d));
  }
  report["derivatives"] = std::move(derivatives);
  if (methods.contour) {
    const ContourDerivative c = df_de_contour(*e, args.k.value_or(1));
    report["normalization"] = {{"scale", c.scale}, {"a", c.a}};
  }
  report["status"] = to_string(status);
  emit(out, report);
  err << "derivative: " << report["derivatives"].size() << " index(es), max discrepancy " << worst << '\n';
  return exit_code(status);
}

// ------------------------------------------------------------------ path

struct PathArgs {
  std::string instance;
  int samples = 101;
  std::string csv;
  ToleranceFlags tol;
};

void write_csv(const std::string& path, const PathTrace& trace) {
  std::ofstream f(path);
  if (!f) throw InputError("cannot write " + path);
  const std::size_t n = trace.samples.front().e.size();
  f << 's';
  for (std::size_t k = 1; k <= n; ++k) f << ",e_" << k;
  f << ",f,discriminant\n";
  for (const PathSample& s : trace.samples) {
    f << format17(s.s);
    for (double v : s.e) f << ',' << format17(v);
    f << ',' << format17(s.f_value) << ',' << format17(s.discriminant) << '\n';
  }
  if (!f) throw InputError("failed writing " + path);
}

int cmd_path(const PathArgs& args, std::ostream& out, std::ostream& err) {
  std::optional<Instance> loaded;
  const ToleranceConfig tol = resolve_tolerances(args.instance, args.tol, loaded);
  const Instance& inst = require_instance(loaded);
  if (inst.kind != InstanceKind::kVectors) throw InputError("path needs an x/y instance");
  if (args.samples < 2) throw InputError("--samples must be >= 2");

  const PathTrace trace = trace_path(PositiveVector(inst.x), PositiveVector(require_y(inst)), args.samples, tol);
  if (!args.csv.empty()) write_csv(args.csv, trace);

  const Status status = trace.monotone ? Status::kHolds : Status::kViolation;
  json report{{"command", "path"},
              {"instance", inst.document},
              {"tolerances", tolerances_to_json(tol)},
              {"samples", args.samples},
              {"values",
               {{"f_start", trace.samples.front().f_value},
                {"f_end", trace.samples.back().f_value},
                {"monotone", trace.monotone},
                {"max_drop", trace.max_drop}}},
              {"degenerate_s", trace.degenerate_s},
              {"all_degenerate", trace.all_degenerate},
              {"status", to_string(status)}};
  if (!args.csv.empty()) report["trace_csv_path"] = args.csv;
  emit(out, report);
  err << "path: " << (trace.monotone ? "nondecreasing" : "NOT monotone") << ", "
      << trace.degenerate_s.size() << " degenerate point(s)\n";
  return exit_code(status);
}

// ---------------------------------------------------------------- random

struct RandomArgs {
  int n = 3;
  int count = 100;
  std::optional<std::uint64_t> seed;
  double spread = 0.5;
  std::string mode = "ssli";
  ToleranceFlags tol;
};

std::uint64_t default_seed() {
  const char* env = std::getenv("SSLI_LAB_SEED");
  if (env == nullptr || *env == '\0') return 0;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0' || env[0] == '-') throw InputError("SSLI_LAB_SEED must be a non-negative integer");
  return v;
}

int cmd_random(const RandomArgs& args, std::ostream& out, std::ostream& err) {
  std::optional<Instance> none;
  const ToleranceConfig tol = resolve_tolerances("", args.tol, none);
  if (args.n < 2) throw InputError("--n must be >= 2");
  if (args.count < 1) throw InputError("--count must be >= 1");
  if (!(args.spread >= 0.0)) throw InputError("--spread must be >= 0");
  if (args.mode != "ssli" && args.mode != "entropy") throw InputError("--mode must be ssli or entropy");
  const bool entropy = args.mode == "entropy";
  const std::uint64_t seed = args.seed ? *args.seed : default_seed();

  // Per-instance seeds come from one master stream; instances run in order.
  std::mt19937_64 master(seed);
  int generated = 0, failures = 0, holds = 0, unmet = 0, violations = 0;
  double min_margin = std::numeric_limits<double>::infinity();
  json worst = nullptr;
  for (int i = 0; i < args.count; ++i) {
    const std::uint64_t instance_seed = master();
    std::optional<DominatedPair> pair;
    try {
      pair.emplace(entropy ? random_entropy_pair(args.n, instance_seed, args.spread, tol)
                           : random_dominated_pair(args.n, instance_seed, args.spread, tol));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kGenerationFailure) throw;
      ++failures;
      continue;
    }
    ++generated;
    Status s;
    double margin;
    if (entropy) {
      const EntropyReport r = verify_entropy_dominance(pair->x, pair->y, tol);
      s = r.status();
      margin = r.margin;
    } else {
      const SsliReport r = verify_ssli(pair->x, pair->y, tol);
      s = r.status();
      margin = r.margin;
    }
    if (s == Status::kHolds) ++holds;
    else if (s == Status::kHypothesesUnmet) ++unmet;
    else ++violations;
    if (margin < min_margin) {
      min_margin = margin;
      worst = {{"index", i}, {"seed", instance_seed}, {"x", pair->x.vector()}, {"y", pair->y.vector()},
               {"margin", margin}};
    }
  }
  if (generated == 0) throw InputError("every instance generation failed");

  const Status status = violations > 0 ? Status::kViolation : Status::kHolds;
  json report{{"command", "random"},
              {"mode", args.mode},
              {"n", args.n},
              {"count", args.count},
              {"seed", seed},
              {"spread", args.spread},
              {"tolerances", tolerances_to_json(tol)},
              {"values",
               {{"generated", generated},
                {"generation_failures", failures},
                {"holds", holds},
                {"hypotheses_unmet", unmet},
                {"violations", violations},
                {"min_margin", min_margin},
                {"worst_instance", worst}}},
              {"status", to_string(status)}};
  emit(out, report);
  err << "random " << args.mode << ": " << generated << " generated, " << violations << " violation(s), min margin "
      << min_margin << '\n';
  return exit_code(status);
}

// ---------------------------------------------------------------- matrix

struct MatrixArgs {
  std::string instance;
  std::string op;
  double t = 0.5;
  std::optional<double> mu, lambda, kappa;
  int grid = 720;
  int restarts = 32;
  std::optional<std::uint64_t> seed;
  ToleranceFlags tol;
};

int cmd_matrix(const MatrixArgs& args, std::ostream& out, std::ostream& err) {
  std::optional<Instance> loaded;
  const ToleranceConfig tol = resolve_tolerances(args.instance, args.tol, loaded);
  const Instance& inst = require_instance(loaded);
  if (inst.kind != InstanceKind::kMatrices) throw InputError("matrix needs a matrix_u instance");
  const auto second = [&]() -> const Eigen::MatrixXd& {
    if (!inst.v) throw InputError("op " + args.op + " needs matrix_v");
    return *inst.v;
  };

  json values;
  Status status = Status::kHolds;
  if (args.op == "invariants") {
    const SpdMatrix u(inst.u);
    values = {{"invariants", spd_invariants(u)}, {"trace", inst.u.trace()}, {"determinant", inst.u.determinant()},
              {"eigenvalues", std::vector<double>(u.eigenvalues().begin(), u.eigenvalues().end())}};
  } else if (args.op == "log") {
    values = {{"log", to_json(matrix_log_spd(SpdMatrix(inst.u)))}};
  } else if (args.op == "hencky") {
    values = {{"energy", hencky_energy(DeformationGradient(inst.u), *hencky_params(args.mu, args.lambda, args.kappa, true))}};
  } else if (args.op == "becker") {
    values = {{"energy", becker_energy(DeformationGradient(inst.u))}};
  } else if (args.op == "entropy") {
    values = {{"entropy", von_neumann_entropy(inst.u)}};
  } else if (args.op == "geodesic") {
    const SpdMatrix c1(inst.u), c2(second());
    const SpdMatrix g = geodesic_point(c1, c2, args.t);
    values = {{"t", args.t}, {"point", to_json(g.matrix())}, {"distance_to_u", geodesic_distance(g, c1)},
              {"distance_to_v", geodesic_distance(g, c2)}, {"distance_uv", geodesic_distance(c1, c2)}};
  } else if (args.op == "distance") {
    const SpdMatrix c1(inst.u), c2(second());
    values = {{"geodesic", geodesic_distance(c1, c2)}, {"log_euclidean", log_euclidean_distance(c1, c2)}};
  } else if (args.op == "polar") {
    const DeformationGradient f(inst.u);
    const PolarDecomposition p = polar_stretch(f);
    values = {{"rotation", to_json(p.rotation)}, {"stretch", to_json(p.stretch.matrix())},
              {"residual", (p.rotation * p.stretch.matrix() - inst.u).norm()}};
  } else if (args.op == "optimality") {
    SoSearchOptions options;
    options.grid = args.grid;
    options.restarts = args.restarts;
    if (args.seed) options.seed = *args.seed;
    const OptimalityGap g = so_n_optimality_gap(DeformationGradient(inst.u), options);
    values = {{"min_value", g.min_value}, {"reference", g.reference}, {"gap", g.gap},
              {"minimizer", to_json(g.minimizer)}};
    if (g.gap < -1e-6 || g.gap > 1e-3) status = Status::kViolation;
  } else if (args.op == "kellogg") {
    const KelloggReport k = kellogg_sector_check(inst.u.cast<Complex>());
    values = {{"invariants", to_json(k.invariants)}, {"invariants_nonneg", k.invariants_nonneg},
              {"eigenvalues", to_json(k.eigenvalues)}, {"all_in_sector", k.all_in_sector},
              {"boundary", k.boundary}};
    if (!k.invariants_nonneg) status = Status::kHypothesesUnmet;
    else if (!k.all_in_sector) status = Status::kViolation;
  } else {
    throw InputError("unknown op \"" + args.op +
                     "\" (expected invariants, log, hencky, becker, entropy, geodesic, distance, polar, "
                     "optimality, kellogg)");
  }

  json report{{"command", "matrix"}, {"op", args.op}, {"instance", inst.document},
              {"tolerances", tolerances_to_json(tol)}, {"values", values}, {"status", to_string(status)}};
  emit(out, report);
  err << "matrix " << args.op << ": " << to_string(status) << '\n';
  return exit_code(status);
}

std::string one_line(std::string s) {
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Verification lab for the sum-of-squared-logarithms inequality", "ssli-lab"};
  app.require_subcommand(1);

  VerifyArgs verify;
  CLI::App* v = app.add_subcommand("verify", "check an instance against its theorem");
  v->add_option("--instance", verify.instance, "instance JSON file")->required();
  v->add_option("--mode", verify.mode, "ssli | entropy | matrix | becker");
  v->add_option("--mu", verify.mu, "shear modulus for the Hencky comparison (matrix mode)");
  v->add_option("--lambda", verify.lambda, "Lame constant for the Hencky comparison");
  v->add_option("--kappa", verify.kappa, "bulk modulus for the Hencky comparison");
  verify.tol.attach(v);

  DerivativeArgs deriv;
  CLI::App* d = app.add_subcommand("derivative", "partial derivatives of f o phi");
  d->add_option("--e", deriv.e, "comma-separated coefficients e_1..e_n");
  d->add_option("--instance", deriv.instance, "instance JSON file (uses x or e_x)");
  d->add_option("--k", deriv.k, "single index in 1..n-1 (default: all)");
  d->add_option("--methods", deriv.methods, "subset of closed,integral,fd,contour");
  deriv.tol.attach(d);

  PathArgs path;
  CLI::App* p = app.add_subcommand("path", "trace f along the straight coefficient path");
  p->add_option("--instance", path.instance, "instance JSON file with x and y")->required();
  p->add_option("--samples", path.samples, "number of samples including both ends");
  p->add_option("--csv", path.csv, "write the sampled trace here");
  path.tol.attach(p);

  RandomArgs random;
  CLI::App* r = app.add_subcommand("random", "fuzz campaign on generated dominated pairs");
  r->add_option("--n", random.n, "dimension");
  r->add_option("--count", random.count, "number of instances");
  r->add_option("--seed", random.seed, "master seed (default: $SSLI_LAB_SEED or 0)");
  r->add_option("--spread", random.spread, "relative perturbation size");
  r->add_option("--mode", random.mode, "ssli | entropy");
  random.tol.attach(r);

  MatrixArgs matrix;
  CLI::App* m = app.add_subcommand("matrix", "matrix applications");
  m->add_option("--instance", matrix.instance, "instance JSON file with matrix_u (and matrix_v)")->required();
  m->add_option("--op", matrix.op,
                "invariants | log | hencky | becker | entropy | geodesic | distance | polar | optimality | kellogg")
      ->required();
  m->add_option("--t", matrix.t, "geodesic parameter in [0, 1]");
  m->add_option("--mu", matrix.mu, "shear modulus");
  m->add_option("--lambda", matrix.lambda, "Lame constant");
  m->add_option("--kappa", matrix.kappa, "bulk modulus");
  m->add_option("--grid", matrix.grid, "angle grid size (n = 2)");
  m->add_option("--restarts", matrix.restarts, "random restarts (n = 3)");
  m->add_option("--seed", matrix.seed, "restart seed (n = 3)");
  matrix.tol.attach(m);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "ssli-lab: error: " << one_line(e.what()) << '\n';
    return kExitInput;
  }

  try {
    if (v->parsed()) return cmd_verify(verify, out, err);
    if (d->parsed()) return cmd_derivative(deriv, out, err);
    if (p->parsed()) return cmd_path(path, out, err);
    if (r->parsed()) return cmd_random(random, out, err);
    return cmd_matrix(matrix, out, err);
  } catch (const Error& e) {
    err << "ssli-lab: error: " << one_line(e.what()) << '\n';
  } catch (const std::exception& e) {
    err << "ssli-lab: error: " << one_line(e.what()) << '\n';
  }
  return kExitInput;
}

}  // namespace ssli::lab
