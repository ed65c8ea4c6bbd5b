#include "ssli_lab/instance.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace ssli::lab {

namespace {

using nlohmann::json;

std::vector<double> number_array(const json& doc, const char* key) {
  const json& node = doc.at(key);
  if (!node.is_array() || node.empty()) throw InputError(std::string("\"") + key + "\" must be a non-empty array");
  std::vector<double> out;
  for (const json& v : node) {
    if (!v.is_number()) throw InputError(std::string("\"") + key + "\" must contain only numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

Eigen::MatrixXd matrix_array(const json& doc, const char* key) {
  const json& node = doc.at(key);
  if (!node.is_array() || node.empty()) throw InputError(std::string("\"") + key + "\" must be a non-empty array of rows");
  const auto n = static_cast<Eigen::Index>(node.size());
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const json& row = node[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) {
      throw InputError(std::string("\"") + key + "\" must be square");
    }
    for (Eigen::Index j = 0; j < n; ++j) {
      const json& v = row[static_cast<std::size_t>(j)];
      if (!v.is_number()) throw InputError(std::string("\"") + key + "\" must contain only numbers");
      m(i, j) = v.get<double>();
    }
  }
  return m;
}

}  // namespace

void apply_tolerances(const json& overrides, ToleranceConfig& tol) {
  if (!overrides.is_object()) throw InputError("\"tolerances\" must be an object");
  for (const auto& [key, value] : overrides.items()) {
    if (!value.is_number()) throw InputError("tolerance \"" + key + "\" must be a number");
    const double v = value.get<double>();
    if (key == "pairing_tol") tol.pairing_tol = v;
    else if (key == "distinct_tol") tol.distinct_tol = v;
    else if (key == "multiplicity_tol") tol.multiplicity_tol = v;
    else if (key == "equality_slack") tol.equality_slack = v;
    else if (key == "quad_abs_tol") tol.quad_abs_tol = v;
    else if (key == "quad_rel_tol") tol.quad_rel_tol = v;
    else if (key == "fd_step") tol.fd_step = v;
    else throw InputError("unknown tolerance \"" + key + "\"");
  }
}

json tolerances_to_json(const ToleranceConfig& tol) {
  return {{"pairing_tol", tol.pairing_tol},       {"distinct_tol", tol.distinct_tol},
          {"multiplicity_tol", tol.multiplicity_tol}, {"equality_slack", tol.equality_slack},
          {"quad_abs_tol", tol.quad_abs_tol},     {"quad_rel_tol", tol.quad_rel_tol},
          {"fd_step", tol.fd_step}};
}

Instance parse_instance(const json& doc, ToleranceConfig& tol) {
  if (!doc.is_object()) throw InputError("instance must be a JSON object");
  const bool vec = doc.contains("x") || doc.contains("y");
  const bool coef = doc.contains("e_x") || doc.contains("e_y");
  const bool mat = doc.contains("matrix_u") || doc.contains("matrix_v");
  if (int(vec) + int(coef) + int(mat) != 1) {
    throw InputError("instance needs exactly one of x/y, e_x/e_y, matrix_u/matrix_v");
  }

  Instance inst;
  inst.document = doc;
  if (mat) {
    inst.kind = InstanceKind::kMatrices;
    if (!doc.contains("matrix_u")) throw InputError("instance lacks \"matrix_u\"");
    inst.u = matrix_array(doc, "matrix_u");
    if (doc.contains("matrix_v")) {
      inst.v = matrix_array(doc, "matrix_v");
      if (inst.v->rows() != inst.u.rows()) throw InputError("matrix_u and matrix_v differ in size");
    }
  } else {
    inst.kind = vec ? InstanceKind::kVectors : InstanceKind::kCoefficients;
    const char* first = vec ? "x" : "e_x";
    const char* second = vec ? "y" : "e_y";
    if (!doc.contains(first)) throw InputError(std::string("instance lacks \"") + first + "\"");
    inst.x = number_array(doc, first);
    if (doc.contains(second)) {
      inst.y = number_array(doc, second);
      if (inst.y->size() != inst.x.size()) throw InputError(std::string(first) + " and " + second + " differ in length");
    }
  }

  if (doc.contains("n")) {
    if (!doc["n"].is_number_integer()) throw InputError("\"n\" must be an integer");
    const auto n = doc["n"].get<long long>();
    const auto actual = mat ? static_cast<long long>(inst.u.rows()) : static_cast<long long>(inst.x.size());
    if (n != actual) throw InputError("\"n\" does not match the instance dimension");
  }
  if (doc.contains("tolerances")) apply_tolerances(doc["tolerances"], tol);
  return inst;
}

Instance load_instance(const std::string& path, ToleranceConfig& tol) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read instance file " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("malformed JSON in " + path + ": " + e.what());
  }
  return parse_instance(doc, tol);
}

std::vector<double> parse_number_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw InputError("not a number: \"" + item + "\"");
    }
    if (item.find_first_not_of(" \t", used) != std::string::npos) throw InputError("not a number: \"" + item + "\"");
    out.push_back(v);
  }
  if (out.empty()) throw InputError("empty number list");
  return out;
}

}  // namespace ssli::lab
