#pragma once

#include <json.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "lvmono/cartan.hpp"
#include "lvmono/homology.hpp"
#include "lvmono/lie.hpp"
#include "lvmono/rep.hpp"

namespace lvmono {

// Deterministic key order: reports must be byte-identical across runs.
using Json = nlohmann::ordered_json;

/// Matrices serialize with explicit shape and row-major "num/den" entries.
/// This layout is the contract for golden files.
inline Json matrix_to_json(const Matrix& m) {
  Json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  Json entries = Json::array();
  for (const Rational& e : m.entries()) entries.push_back(e.to_fraction());
  j["entries"] = std::move(entries);
  return j;
}

inline Matrix matrix_from_json(const Json& j) {
  const std::size_t rows = j.at("rows").get<std::size_t>();
  const std::size_t cols = j.at("cols").get<std::size_t>();
  const Json& entries = j.at("entries");
  if (entries.size() != rows * cols)
    throw std::invalid_argument("matrix_from_json: entry count mismatch");
  Matrix m(rows, cols);
  std::size_t k = 0;
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t jj = 0; jj < cols; ++jj)
      m(i, jj) = Rational(entries[k++].get<std::string>());
  return m;
}

inline Json basis_to_json(const CycleBasis& basis) {
  Json j = Json::array();
  for (const CycleLabel& l : basis.order) j.push_back(l.str());
  return j;
}

inline CycleLabel label_from_string(const std::string& s) {
  if (s == "delta13") return {CycleKind::Delta13, 0};
  if (s == "delta23") return {CycleKind::Delta23, 0};
  if (s.rfind("delta12_", 0) == 0)
    return {CycleKind::Delta12, std::stoi(s.substr(8))};
  if (s.rfind("delta_", 0) == 0)
    return {CycleKind::Delta, std::stoi(s.substr(6))};
  throw std::invalid_argument("label_from_string: cannot parse '" + s + "'");
}

inline Json model_to_json(const MonodromyModel& model) {
  Json j;
  j["p"] = model.p;
  j["basis"] = basis_to_json(model.basis);
  j["omega"] = matrix_to_json(model.omega);
  j["m1"] = matrix_to_json(model.m1);
  j["m2"] = matrix_to_json(model.m2);
  j["critical_value_t1"] = model.critical_value_t1.to_fraction();
  j["critical_value_t2"] = model.critical_value_t2.to_fraction();
  return j;
}

inline MonodromyModel model_from_json(const Json& j) {
  MonodromyModel model;
  model.p = j.at("p").get<int>();
  model.basis.p = model.p;
  for (const auto& s : j.at("basis"))
    model.basis.order.push_back(label_from_string(s.get<std::string>()));
  model.omega = matrix_from_json(j.at("omega"));
  model.m1 = matrix_from_json(j.at("m1"));
  model.m2 = matrix_from_json(j.at("m2"));
  model.critical_value_t1 = Rational(j.at("critical_value_t1").get<std::string>());
  model.critical_value_t2 = Rational(j.at("critical_value_t2").get<std::string>());
  return model;
}

inline Json columns_to_json(const std::vector<Matrix>& cols) {
  Json j = Json::array();
  for (const Matrix& c : cols) j.push_back(matrix_to_json(c));
  return j;
}

inline std::vector<Matrix> columns_from_json(const Json& j) {
  std::vector<Matrix> cols;
  for (const auto& c : j) cols.push_back(matrix_from_json(c));
  return cols;
}

inline Json reduced_to_json(const ReducedRep& rep) {
  Json j;
  j["p"] = rep.p;
  j["dim"] = rep.dim;
  j["j_form"] = matrix_to_json(rep.j_form);
  j["m1_red"] = matrix_to_json(rep.m1_red);
  j["m2_red"] = matrix_to_json(rep.m2_red);
  j["lift_basis"] = columns_to_json(rep.lift_basis);
  j["kernel_basis"] = columns_to_json(rep.kernel_basis);
  return j;
}

inline ReducedRep reduced_from_json(const Json& j) {
  ReducedRep rep;
  rep.p = j.at("p").get<int>();
  rep.dim = j.at("dim").get<std::size_t>();
  rep.j_form = matrix_from_json(j.at("j_form"));
  rep.m1_red = matrix_from_json(j.at("m1_red"));
  rep.m2_red = matrix_from_json(j.at("m2_red"));
  rep.lift_basis = columns_from_json(j.at("lift_basis"));
  rep.kernel_basis = columns_from_json(j.at("kernel_basis"));
  return rep;
}

inline Json closure_to_json(const LieAlgebraBasis& basis) {
  Json j;
  j["dim"] = basis.dim();
  Json elems = Json::array();
  for (const Matrix& e : basis.elements) elems.push_back(matrix_to_json(e));
  j["elements"] = std::move(elems);
  j["provenance"] = basis.provenance;
  return j;
}

inline LieAlgebraBasis closure_from_json(const Json& j) {
  LieAlgebraBasis basis;
  for (const auto& e : j.at("elements")) basis.elements.push_back(matrix_from_json(e));
  for (const auto& s : j.at("provenance")) basis.provenance.push_back(s.get<std::string>());
  return basis;
}

/// Table mirroring the root-space layout: one row per root vector with its
/// (ad_H1, ad_H2) eigenvalue pair and matrix.
inline Json cartan_to_json(const RootDecomposition& d) {
  Json j;
  j["h1"] = matrix_to_json(d.h1);
  j["h2"] = matrix_to_json(d.h2);
  Json roots = Json::array();
  for (const RootVector& r : d.roots) {
    Json row;
    row["name"] = r.name;
    row["ad_h1"] = r.ad_h1.to_fraction();
    row["ad_h2"] = r.ad_h2.to_fraction();
    row["matrix"] = matrix_to_json(r.value);
    roots.push_back(std::move(row));
  }
  j["roots"] = std::move(roots);
  return j;
}

inline RootDecomposition cartan_from_json(const Json& j) {
  RootDecomposition d;
  d.h1 = matrix_from_json(j.at("h1"));
  d.h2 = matrix_from_json(j.at("h2"));
  for (const auto& row : j.at("roots")) {
    RootVector r;
    r.name = row.at("name").get<std::string>();
    r.ad_h1 = Rational(row.at("ad_h1").get<std::string>());
    r.ad_h2 = Rational(row.at("ad_h2").get<std::string>());
    r.value = matrix_from_json(row.at("matrix"));
    d.roots.push_back(std::move(r));
  }
  return d;
}

}  // namespace lvmono
