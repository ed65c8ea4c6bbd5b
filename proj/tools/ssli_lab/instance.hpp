#pragma once

#include <Eigen/Dense>
#include <nlohmann/json.hpp>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ssli/tolerance.hpp"

namespace ssli::lab {

/// Malformed or inconsistent user input; maps to exit code 1.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class InstanceKind { kVectors, kCoefficients, kMatrices };

struct Instance {
  InstanceKind kind = InstanceKind::kVectors;
  std::vector<double> x;  // x, or e_x for kCoefficients
  std::optional<std::vector<double>> y;
  Eigen::MatrixXd u;
  std::optional<Eigen::MatrixXd> v;
  nlohmann::json document;
};

/// Exactly one of {x, y}, {e_x, e_y}, {matrix_u, matrix_v} must be present;
/// the second member of each form is optional here and demanded by the
/// commands that need it. "tolerances" entries are applied onto `tol`.
Instance parse_instance(const nlohmann::json& doc, ToleranceConfig& tol);
Instance load_instance(const std::string& path, ToleranceConfig& tol);

/// Keys: pairing_tol, distinct_tol, multiplicity_tol, equality_slack,
/// quad_abs_tol, quad_rel_tol, fd_step. Unknown keys are rejected.
void apply_tolerances(const nlohmann::json& overrides, ToleranceConfig& tol);
nlohmann::json tolerances_to_json(const ToleranceConfig& tol);

std::vector<double> parse_number_list(const std::string& text);

}  // namespace ssli::lab
