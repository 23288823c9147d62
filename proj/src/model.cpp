#include "lpred/model.hpp"

#include "lpred/errors.hpp"

#include <json.hpp>

#include <cmath>
#include <sstream>

namespace lpred {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

bool same_bits(const Eigen::Ref<const Matrix>& a, const Eigen::Ref<const Matrix>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == b(i, j)) && !(std::isnan(a(i, j)) && std::isnan(b(i, j)))) return false;
  return true;
}

bool same_opt(const std::optional<Vector>& a, const std::optional<Vector>& b) {
  if (a.has_value() != b.has_value()) return false;
  return !a || same_bits(*a, *b);
}

double read_number(const json& v, const std::string& where) {
  if (!v.is_number()) throw InputError("field " + where + ": expected a number");
  return v.get<double>();
}

Vector read_vector(const json& v, const std::string& where) {
  if (!v.is_array()) throw InputError("field " + where + ": expected an array of numbers");
  Vector out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i)
    out(static_cast<Eigen::Index>(i)) = read_number(v[i], where + "[" + std::to_string(i) + "]");
  return out;
}

Matrix read_matrix(const json& v, const std::string& where) {
  if (!v.is_array()) throw InputError("field " + where + ": expected an array of rows");
  const std::size_t rows = v.size();
  std::size_t cols = 0;
  for (std::size_t i = 0; i < rows; ++i) {
    const std::string row_name = where + "[" + std::to_string(i) + "]";
    if (!v[i].is_array()) throw InputError("field " + row_name + ": expected an array of numbers");
    if (i == 0) cols = v[i].size();
    else if (v[i].size() != cols)
      throw InputError("field " + row_name + ": row has " + std::to_string(v[i].size()) +
                       " entries, expected " + std::to_string(cols));
  }
  Matrix out(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = read_number(
          v[i][j], where + "[" + std::to_string(i) + "][" + std::to_string(j) + "]");
  return out;
}

const json& require(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) throw InputError(std::string("missing field \"") + key + "\"");
  return *it;
}

json parse(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

ordered_json vector_json(const Vector& v) {
  ordered_json arr = ordered_json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v(i));
  return arr;
}

}  // namespace

bool operator==(const LinearProgram& a, const LinearProgram& b) {
  return a.name == b.name && a.dimension == b.dimension && a.sense == b.sense &&
         same_bits(a.A, b.A) && same_bits(a.b, b.b) && same_bits(a.c, b.c);
}

bool operator==(const Solution& a, const Solution& b) {
  return a.status == b.status && same_opt(a.x, b.x) && a.objective == b.objective &&
         same_opt(a.interior_point, b.interior_point) && a.residual == b.residual;
}

std::string_view to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Optimal: return "optimal";
    case SolveStatus::Unbounded: return "unbounded";
    case SolveStatus::Infeasible: return "infeasible";
    case SolveStatus::OriginNotInterior: return "origin_not_interior";
    case SolveStatus::InputError: return "input_error";
  }
  return "input_error";
}

SolveStatus solve_status_from_string(std::string_view s) {
  for (auto st : {SolveStatus::Optimal, SolveStatus::Unbounded, SolveStatus::Infeasible,
                  SolveStatus::OriginNotInterior, SolveStatus::InputError})
    if (to_string(st) == s) return st;
  throw InputError("field status: unknown value \"" + std::string(s) + "\"");
}

bool ValidationReport::has(Violation v) const {
  for (const auto& issue : issues)
    if (issue.kind == v) return true;
  return false;
}

std::string ValidationReport::summary() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < issues.size(); ++i) {
    if (i) out << "; ";
    out << issues[i].message;
  }
  return out.str();
}

ValidationReport validate(const LinearProgram& lp) {
  ValidationReport report;
  auto add = [&](Violation v, std::string msg) { report.issues.push_back({v, std::move(msg)}); };

  if (lp.dimension < 2)
    add(Violation::DimensionTooSmall,
        "dimension " + std::to_string(lp.dimension) + " is below the minimum of 2");
  if (lp.A.rows() == 0) add(Violation::NoConstraints, "A has no rows");
  if (lp.A.rows() > 0 && lp.A.cols() != lp.dimension)
    add(Violation::DimensionMismatch, "A has " + std::to_string(lp.A.cols()) +
                                          " columns but dimension is " +
                                          std::to_string(lp.dimension));
  if (lp.b.size() != lp.A.rows())
    add(Violation::RhsLengthMismatch, "b has " + std::to_string(lp.b.size()) +
                                          " entries but A has " + std::to_string(lp.A.rows()) +
                                          " rows");
  if (lp.c.size() != lp.dimension)
    add(Violation::ObjectiveLengthMismatch, "objective has " + std::to_string(lp.c.size()) +
                                                " entries but dimension is " +
                                                std::to_string(lp.dimension));
  if (!lp.A.allFinite()) add(Violation::NonFiniteEntry, "A contains a non-finite entry");
  if (!lp.b.allFinite()) add(Violation::NonFiniteEntry, "b contains a non-finite entry");
  if (!lp.c.allFinite()) add(Violation::NonFiniteEntry, "objective contains a non-finite entry");
  return report;
}

LinearProgram load_lp(std::string_view text) {
  const json doc = parse(text);
  if (!doc.is_object()) throw InputError("malformed JSON: top level must be an object");

  for (const auto& [key, value] : doc.items()) {
    if (key != "name" && key != "dimension" && key != "A" && key != "b" && key != "objective" &&
        key != "sense")
      throw InputError("field \"" + key + "\": unknown key (only <= rows are supported)");
  }

  LinearProgram lp;
  if (auto it = doc.find("name"); it != doc.end()) {
    if (!it->is_string()) throw InputError("field name: expected a string");
    lp.name = it->get<std::string>();
  }
  const json& dim = require(doc, "dimension");
  if (!dim.is_number_integer()) throw InputError("field dimension: expected an integer");
  lp.dimension = dim.get<int>();
  lp.A = read_matrix(require(doc, "A"), "A");
  lp.b = read_vector(require(doc, "b"), "b");
  lp.c = read_vector(require(doc, "objective"), "objective");

  const json& sense = require(doc, "sense");
  if (!sense.is_string()) throw InputError("field sense: expected \"maximize\" or \"minimize\"");
  const auto s = sense.get<std::string>();
  if (s == "maximize") lp.sense = Sense::Maximize;
  else if (s == "minimize") lp.sense = Sense::Minimize;
  else throw InputError("field sense: expected \"maximize\" or \"minimize\", got \"" + s + "\"");

  // An empty A parses as 0x0; give it the declared width so the report is about rows.
  if (lp.A.rows() == 0) lp.A.resize(0, std::max(lp.dimension, 0));

  if (auto report = validate(lp); !report.ok()) throw InputError(report.summary());
  return lp;
}

std::string save_lp(const LinearProgram& lp) {
  ordered_json doc;
  if (lp.name) doc["name"] = *lp.name;
  doc["dimension"] = lp.dimension;
  ordered_json rows = ordered_json::array();
  for (Eigen::Index i = 0; i < lp.A.rows(); ++i) rows.push_back(vector_json(lp.A.row(i).transpose()));
  doc["A"] = std::move(rows);
  doc["b"] = vector_json(lp.b);
  doc["objective"] = vector_json(lp.c);
  doc["sense"] = lp.sense == Sense::Maximize ? "maximize" : "minimize";
  return doc.dump(2) + "\n";
}

std::string save_solution(const Solution& sol) {
  ordered_json doc;
  doc["status"] = std::string(to_string(sol.status));
  if (sol.x) doc["x"] = vector_json(*sol.x);
  if (sol.objective) doc["objective"] = *sol.objective;
  if (sol.residual) doc["residual"] = *sol.residual;
  if (sol.interior_point) doc["interior_point"] = vector_json(*sol.interior_point);
  return doc.dump(2) + "\n";
}

Solution load_solution(std::string_view text) {
  const json doc = parse(text);
  if (!doc.is_object()) throw InputError("malformed JSON: top level must be an object");
  Solution sol;
  const json& status = require(doc, "status");
  if (!status.is_string()) throw InputError("field status: expected a string");
  sol.status = solve_status_from_string(status.get<std::string>());
  if (auto it = doc.find("x"); it != doc.end()) sol.x = read_vector(*it, "x");
  if (auto it = doc.find("objective"); it != doc.end()) sol.objective = read_number(*it, "objective");
  if (auto it = doc.find("residual"); it != doc.end()) sol.residual = read_number(*it, "residual");
  if (auto it = doc.find("interior_point"); it != doc.end())
    sol.interior_point = read_vector(*it, "interior_point");
  return sol;
}

double max_residual(const LinearProgram& lp, const Vector& x) {
  if (x.size() != lp.A.cols()) throw DimensionError("point length does not match the LP dimension");
  return (lp.A * x - lp.b).maxCoeff();
}

}  // namespace lpred
