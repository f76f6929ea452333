#pragma once

// JSON file formats.
//
// Algebra:  {"field": "GF(3)", "dim": 2, "brackets": [{"i": 1, "j": 2, "value": ["0", "1"]}]}
//           1-based indices with i < j; omitted pairs are zero; optional "labels".
// Subspace: list of basis vectors, each a list of scalar strings.
// Matrix:   list of rows of scalar strings.
// Chain:    list of subspaces M_0 = L, ..., M_n = V (or {"chain": [...]}).

#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <variant>

#include <nlohmann/json.hpp>

#include "lieform/formation.hpp"

namespace lieform {

using Json = nlohmann::ordered_json;

using AnyAlgebra = std::variant<LieAlgebra<Rational>, LieAlgebra<ModP>>;

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("invalid JSON in '" + path + "': " + e.what());
  }
}

namespace detail {

inline const Json& require_key(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing key '") + key + "'");
  return j.at(key);
}

template <FieldElement K>
K parse_scalar_json(const field_of<K>& field, const Json& j) {
  if (j.is_string()) return field.parse(j.get<std::string>());
  throw ParseError("scalar must be a string in the exact scalar grammar");
}

template <FieldElement K>
Vector<K> parse_vector_json(const field_of<K>& field, const Json& j, std::size_t n) {
  if (!j.is_array() || j.size() != n) throw ParseError("vector must be an array of length " + std::to_string(n));
  Vector<K> v;
  for (const auto& x : j) v.push_back(parse_scalar_json<K>(field, x));
  return v;
}

template <FieldElement K>
LieAlgebra<K> parse_algebra_in(const field_of<K>& field, const Json& j) {
  const auto& dim_json = require_key(j, "dim");
  if (!dim_json.is_number_integer() || dim_json.get<long long>() < 0) throw ParseError("'dim' must be a non-negative integer");
  const auto n = static_cast<std::size_t>(dim_json.get<long long>());
  LieAlgebra<K> L(field, n);
  std::set<std::pair<long long, long long>> seen;
  if (j.contains("brackets")) {
    const auto& br = j.at("brackets");
    if (!br.is_array()) throw ParseError("'brackets' must be an array");
    for (const auto& e : br) {
      const auto& ij = require_key(e, "i");
      const auto& jj = require_key(e, "j");
      if (!ij.is_number_integer() || !jj.is_number_integer()) throw ParseError("bracket indices must be integers");
      auto i = ij.get<long long>(), k = jj.get<long long>();
      if (i < 1 || k < 1 || i > static_cast<long long>(n) || k > static_cast<long long>(n))
        throw ParseError("bracket index out of range");
      if (i >= k) throw ParseError("bracket entries require i < j");
      if (!seen.insert({i, k}).second) throw ParseError("duplicate bracket entry");
      L.set_bracket(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(k - 1),
                    parse_vector_json<K>(field, require_key(e, "value"), n));
    }
  }
  if (j.contains("labels")) {
    const auto& lab = j.at("labels");
    if (!lab.is_array() || lab.size() != n) throw ParseError("'labels' must list one label per basis element");
    std::vector<std::string> labels;
    for (const auto& x : lab) labels.push_back(x.get<std::string>());
    L.set_labels(std::move(labels));
  }
  return L;
}

}  // namespace detail

/// Parses the structure-constant format without checking Jacobi or solubility.
inline AnyAlgebra parse_algebra(const Json& j) {
  auto spec = FieldSpec::parse(detail::require_key(j, "field").get<std::string>());
  if (spec.is_prime_field()) return detail::parse_algebra_in<ModP>(PrimeField(spec.p), j);
  return detail::parse_algebra_in<Rational>(RationalField{}, j);
}

/// parse_algebra followed by require_valid (Jacobi and solubility).
inline AnyAlgebra load_algebra(const Json& j) {
  auto a = parse_algebra(j);
  std::visit([](const auto& L) { require_valid(L); }, a);
  return a;
}

inline AnyAlgebra load_algebra_file(const std::string& path) { return load_algebra(read_json_file(path)); }

template <FieldElement K>
Json to_json(const Vector<K>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

template <FieldElement K>
Json to_json(const LieAlgebra<K>& L) {
  Json out;
  out["field"] = L.field().spec().to_string();
  out["dim"] = L.dim();
  Json br = Json::array();
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = i + 1; j < L.dim(); ++j) {
      auto v = L.basis_bracket(i, j);
      if (is_zero_vector(v)) continue;
      br.push_back({{"i", i + 1}, {"j", j + 1}, {"value", to_json(v)}});
    }
  out["brackets"] = std::move(br);
  if (!L.labels().empty()) out["labels"] = L.labels();
  return out;
}

template <FieldElement K>
Json to_json(const Subspace<K>& s) {
  Json out = Json::array();
  for (std::size_t i = 0; i < s.dim(); ++i) out.push_back(to_json(s.basis_vector(i)));
  return out;
}

template <FieldElement K>
Json to_json(const Matrix<K>& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row_vector(r)));
  return out;
}

template <FieldElement K>
Json to_json(const NormaliserChain<K>& chain) {
  Json out = Json::array();
  for (const auto& m : chain.members) out.push_back(to_json(m));
  return out;
}

template <FieldElement K>
Subspace<K> subspace_from_json(const field_of<K>& field, std::size_t n, const Json& j) {
  if (!j.is_array()) throw ParseError("subspace must be a list of vectors");
  std::vector<Vector<K>> vs;
  for (const auto& v : j) vs.push_back(detail::parse_vector_json<K>(field, v, n));
  return Subspace<K>::span(field, n, vs);
}

template <FieldElement K>
Matrix<K> matrix_from_json(const field_of<K>& field, std::size_t n, const Json& j) {
  if (!j.is_array() || j.size() != n) throw ParseError("matrix must have " + std::to_string(n) + " rows");
  std::vector<Vector<K>> rows;
  for (const auto& r : j) rows.push_back(detail::parse_vector_json<K>(field, r, n));
  return Matrix<K>::from_rows(field, n, rows);
}

template <FieldElement K>
NormaliserChain<K> chain_from_json(const field_of<K>& field, std::size_t n, const Json& j) {
  const Json& list = j.is_object() ? detail::require_key(j, "chain") : j;
  if (!list.is_array()) throw ParseError("chain must be a list of subspaces");
  NormaliserChain<K> chain;
  for (const auto& s : list) chain.members.push_back(subspace_from_json<K>(field, n, s));
  return chain;
}

/// Text form "1,0,0;0,1,1": vectors separated by ';', scalars by ','. Empty
/// text is the zero subspace.
template <FieldElement K>
Subspace<K> parse_basis_spec(const field_of<K>& field, std::size_t n, const std::string& text) {
  std::vector<Vector<K>> vs;
  std::stringstream vecs(text);
  std::string vec;
  while (std::getline(vecs, vec, ';')) {
    if (vec.empty()) continue;
    Vector<K> v;
    std::stringstream scalars(vec);
    std::string s;
    while (std::getline(scalars, s, ',')) v.push_back(field.parse(s));
    if (v.size() != n) throw ParseError("basis vector '" + vec + "' does not have " + std::to_string(n) + " entries");
    vs.push_back(std::move(v));
  }
  return Subspace<K>::span(field, n, vs);
}

/// Replayable record of a property violation.
template <FieldElement K>
Json counterexample_json(const std::string& property, const std::string& formation, const LieAlgebra<K>& L,
                         const std::optional<Subspace<K>>& u, const std::optional<Matrix<K>>& d,
                         const std::string& detail = {}) {
  Json out;
  out["property"] = property;
  out["formation"] = formation;
  out["algebra"] = to_json(L);
  if (u) out["subalgebra"] = to_json(*u);
  if (d) out["derivation"] = to_json(*d);
  if (!detail.empty()) out["detail"] = detail;
  return out;
}

}  // namespace lieform
