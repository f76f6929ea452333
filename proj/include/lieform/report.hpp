#pragma once

// Analysis report of a single algebra, as deterministic JSON plus a text
// rendering of the same data.

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "lieform/io.hpp"

namespace lieform {

/// FNV-1a over the canonical JSON of the structure constants.
template <FieldElement K>
std::string fingerprint(const LieAlgebra<K>& L) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : to_json(L).dump()) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream out;
  out << L.field().spec().to_string() << "/dim" << L.dim() << "/" << std::hex << h;
  return out.str();
}

namespace detail {

template <class Fn>
Json guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const UnsupportedField& e) {
    return Json{{"unsupported", e.what()}};
  } catch (const BudgetExceeded& e) {
    return Json{{"unsupported", e.what()}};
  }
}

template <FieldElement K>
Json dims_of(const std::vector<Subspace<K>>& series) {
  Json out = Json::array();
  for (const auto& s : series) out.push_back(s.dim());
  return out;
}

template <FieldElement K>
Json formation_section(const LieAlgebra<K>& L, const Formation<K>& F) {
  Json out;
  out["formation"] = F.name;
  out["member"] = guarded([&] { return Json(is_member(F, L)); });
  out["maximal_subalgebras"] = guarded([&] {
    const auto cs = chief_series(L);
    const auto nil = nilradical(L, cs);
    Json list = Json::array();
    for (const auto& m : maximal_subalgebras(L)) {
      auto c = classify_maximal(L, m.space(), F, cs);
      list.push_back({{"basis", to_json(m.space())},
                      {"verdict", to_string(c.verdict)},
                      {"critical", c.verdict == Verdict::FAbnormal && sum(m.space(), nil.space()).is_full()}});
    }
    return list;
  });
  out["normalisers"] = guarded([&] {
    const auto cs = chief_series(L);
    Json list = Json::array();
    for (const auto& [v, chain] : f_normalisers(L, F)) {
      list.push_back({{"basis", to_json(v)},
                      {"chain", to_json(chain)},
                      {"cover_avoid", cover_avoid_check(L, v, F, cs).passed()},
                      {"intravariant_linear", is_intravariant_linear(L, v)},
                      {"intravariant_extension", is_intravariant_extension(L, v)}});
    }
    return list;
  });
  return out;
}

}  // namespace detail

template <FieldElement K>
Json analysis_report(const LieAlgebra<K>& L, const std::vector<Formation<K>>& formations) {
  Json out;
  out["fingerprint"] = fingerprint(L);
  out["field"] = L.field().spec().to_string();
  out["dim"] = L.dim();
  out["derived_series_dims"] = detail::dims_of(derived_series(L));
  out["lower_central_series_dims"] = detail::dims_of(lower_central_series(L));
  out["chief_series"] = detail::guarded([&] {
    Json terms = Json::array();
    for (const auto& t : chief_series(L).terms) terms.push_back(to_json(t.space()));
    return terms;
  });
  out["nilradical"] = detail::guarded([&] { return to_json(nilradical(L).space()); });
  auto der = derivation_algebra(L);
  out["derivation_algebra_dim"] = der.dim();
  out["inner_derivations_dim"] = inner_derivations(L).dim();
  Json sections = Json::array();
  for (const auto& F : formations) sections.push_back(detail::formation_section(L, F));
  out["formations"] = std::move(sections);
  return out;
}

namespace detail {

inline std::string vector_text(const Json& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].get<std::string>();
  return s + ")";
}

inline std::string basis_text(const Json& b) {
  std::string s = "span{";
  for (std::size_t i = 0; i < b.size(); ++i) s += (i ? ", " : "") + vector_text(b[i]);
  return s + "}";
}

inline std::string dims_text(const Json& d) {
  std::string s = "[";
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? ", " : "") + std::to_string(d[i].get<std::size_t>());
  return s + "]";
}

inline bool unsupported(const Json& j, std::ostream& out, const std::string& indent) {
  if (j.is_object() && j.contains("unsupported")) {
    out << indent << "unsupported: " << j["unsupported"].get<std::string>() << "\n";
    return true;
  }
  return false;
}

}  // namespace detail

inline std::string render_text(const Json& report) {
  using namespace detail;
  std::ostringstream out;
  out << "algebra " << report["fingerprint"].get<std::string>() << "\n";
  out << "  derived series dims:       " << dims_text(report["derived_series_dims"]) << "\n";
  out << "  lower central series dims: " << dims_text(report["lower_central_series_dims"]) << "\n";
  out << "  chief series:\n";
  if (!unsupported(report["chief_series"], out, "    "))
    for (const auto& t : report["chief_series"]) out << "    " << basis_text(t) << "\n";
  out << "  nilradical: ";
  if (!unsupported(report["nilradical"], out, "")) out << basis_text(report["nilradical"]) << "\n";
  out << "  Der(L): dim " << report["derivation_algebra_dim"].get<std::size_t>() << ", inner dim "
      << report["inner_derivations_dim"].get<std::size_t>() << "\n";
  for (const auto& f : report["formations"]) {
    out << "formation " << f["formation"].get<std::string>() << "\n";
    out << "  member: ";
    if (!unsupported(f["member"], out, "")) out << (f["member"].get<bool>() ? "yes" : "no") << "\n";
    out << "  maximal subalgebras:\n";
    if (!unsupported(f["maximal_subalgebras"], out, "    "))
      for (const auto& m : f["maximal_subalgebras"])
        out << "    " << basis_text(m["basis"]) << "  " << m["verdict"].get<std::string>()
            << (m["critical"].get<bool>() ? ", critical" : "") << "\n";
    out << "  normalisers:\n";
    if (!unsupported(f["normalisers"], out, "    "))
      for (const auto& n : f["normalisers"]) {
        out << "    " << basis_text(n["basis"]) << "  chain length " << (n["chain"].size() - 1)
            << ", cover/avoid " << (n["cover_avoid"].get<bool>() ? "ok" : "FAILED") << ", intravariant "
            << (n["intravariant_linear"].get<bool>() ? "yes" : "no") << " (linear), "
            << (n["intravariant_extension"].get<bool>() ? "yes" : "no") << " (extension)\n";
      }
  }
  return out.str();
}

}  // namespace lieform
