#pragma once

// JSON documents: group, module, case and witness specifications in; graphs
// and reports out. Key order in emitted objects is fixed.

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "cdgraph/chardeg.hpp"
#include "cdgraph/classes.hpp"
#include "cdgraph/classify.hpp"
#include "cdgraph/error.hpp"
#include "cdgraph/group.hpp"
#include "cdgraph/modact.hpp"
#include "cdgraph/module.hpp"
#include "cdgraph/prime_graph.hpp"

namespace cdg::io {

using Json = nlohmann::ordered_json;

// Inline JSON when the text starts with '{', otherwise a file path.
inline Json load_document(const std::string& text_or_path) {
  std::string text = text_or_path;
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos || text[first] != '{') {
    std::ifstream in(text_or_path);
    if (!in) throw InvalidArgument("cannot open spec file '" + text_or_path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed JSON: ") + e.what());
  }
}

namespace detail {

inline const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidArgument(std::string("spec: missing field '") + key + "'");
  return j.at(key);
}

inline u64 uint_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
    throw InvalidArgument(std::string("spec: field '") + key + "' must be a non-negative integer");
  }
  return v.get<u64>();
}

inline std::string string_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) throw InvalidArgument(std::string("spec: field '") + key + "' must be a string");
  return v.get<std::string>();
}

inline PrimeSet prime_list(const Json& j, const char* key) {
  if (!j.contains(key)) return {};
  const Json& v = j.at(key);
  if (!v.is_array()) throw InvalidArgument(std::string("spec: field '") + key + "' must be an array");
  std::vector<u64> out;
  for (const Json& x : v) {
    if (!x.is_number_unsigned()) throw InvalidArgument(std::string("spec: '") + key + "' must list primes");
    out.push_back(x.get<u64>());
  }
  return PrimeSet(std::move(out));
}

}  // namespace detail

inline Json to_json(const PrimeSet& s) { return Json(s.values()); }

// Module reference: {"module": "V1"} or {"module": "natural", "q": 8}.
inline ModuleAction module_from_json(const Json& j, std::size_t ceiling = kDefaultCeiling) {
  const std::string label = detail::string_field(j, "module");
  std::optional<u64> q;
  if (j.contains("q")) q = detail::uint_field(j, "q");
  return module_catalog(label, q, ceiling);
}

inline GroupPtr group_from_json(const Json& j, std::size_t ceiling = kDefaultCeiling) {
  const std::string construct = detail::string_field(j, "construct");
  if (construct == "SL2") return sl2_group(detail::uint_field(j, "q"), ceiling);
  if (construct == "semidirect") return semidirect(module_from_json(j, ceiling), ceiling);
  if (construct == "cyclic") return cyclic_group(detail::uint_field(j, "n"), ceiling);
  if (construct == "extraspecial") {
    const u64 t = detail::uint_field(j, "t");
    if (j.contains("order") && detail::uint_field(j, "order") != t * t * t) {
      throw InvalidArgument("spec: extraspecial order must be t^3");
    }
    ExtraspecialType type = ExtraspecialType::heisenberg;
    if (t == 2) {
      const std::string name = j.contains("type") ? detail::string_field(j, "type") : "";
      if (name == "quaternion") {
        type = ExtraspecialType::quaternion;
      } else if (name == "dihedral") {
        type = ExtraspecialType::dihedral;
      } else {
        throw InvalidArgument("spec: extraspecial t = 2 needs \"type\": \"quaternion\" or \"dihedral\"");
      }
    } else if (j.contains("exponent") && detail::uint_field(j, "exponent") != t) {
      throw InvalidArgument("spec: only exponent t is supported for odd t");
    }
    return extraspecial_group(t, type, ceiling);
  }
  if (construct == "direct_product") {
    const Json& factors = detail::field(j, "factors");
    if (!factors.is_array() || factors.size() < 2) throw InvalidArgument("spec: direct_product needs two or more factors");
    GroupPtr g = group_from_json(factors[0], ceiling);
    for (std::size_t i = 1; i < factors.size(); ++i) g = direct_product(g, group_from_json(factors[i], ceiling), ceiling);
    return g;
  }
  throw InvalidArgument("spec: unknown construct '" + construct + "'");
}

inline ClassificationCase case_from_json(const Json& j) {
  ClassificationCase c;
  c.tag = case_tag_from_string(detail::string_field(j, "theorem"));
  if (is_t1_case(c.tag)) {
    c.a = static_cast<unsigned>(detail::uint_field(j, "a"));
  } else {
    c.a = j.contains("a") ? static_cast<unsigned>(detail::uint_field(j, "a")) : 2;
  }
  c.p = detail::uint_field(j, "p");
  c.pi_outer = detail::prime_list(j, "pi_outer");
  c.v_gk = j.contains("v_gk") ? detail::prime_list(j, "v_gk") : PrimeSet{c.p};
  if (j.contains("k_is_sl2_5")) {
    if (!j.at("k_is_sl2_5").is_boolean()) throw InvalidArgument("spec: k_is_sl2_5 must be a boolean");
    c.k_is_sl2_5 = j.at("k_is_sl2_5").get<bool>();
  }
  validate(c);
  return c;
}

inline Json to_json(const ClassificationCase& c) {
  Json j;
  j["theorem"] = to_string(c.tag);
  j["a"] = c.a;
  j["p"] = c.p;
  j["pi_outer"] = to_json(c.pi_outer);
  j["v_gk"] = to_json(c.v_gk);
  if (c.tag == CaseTag::T2a) j["k_is_sl2_5"] = c.k_is_sl2_5;
  return j;
}

inline Json to_json(const PrimeGraph& g) {
  Json j;
  j["vertices"] = to_json(g.vertices());
  Json edges = Json::array();
  for (auto [p, q] : g.edges()) edges.push_back({p, q});
  j["edges"] = edges;
  return j;
}

inline PrimeGraph graph_from_json(const Json& j) {
  PrimeSet v = detail::prime_list(j, "vertices");
  std::vector<std::pair<u64, u64>> edges;
  for (const Json& e : detail::field(j, "edges")) {
    if (!e.is_array() || e.size() != 2) throw InvalidArgument("graph: edges must be pairs");
    edges.emplace_back(e[0].get<u64>(), e[1].get<u64>());
  }
  return PrimeGraph(std::move(v), edges);
}

inline Json to_json(const DegreeMultiset& d) {
  Json pairs = Json::array();
  for (auto [deg, m] : d.entries()) pairs.push_back({deg, m});
  return pairs;
}

inline Json group_report(const FiniteGroup& g, const ClassData& cd) {
  Json j;
  j["name"] = g.name();
  j["order"] = g.order();
  j["classes"] = cd.count();
  Json sizes = Json::array();
  for (const auto& c : cd.classes) sizes.push_back(c.size);
  j["class_sizes"] = sizes;
  return j;
}

inline Json degrees_report(const FiniteGroup& g, const ClassData& cd, const DegreeMultiset& d) {
  Json j;
  j["group"] = g.name();
  j["order"] = g.order();
  j["classes"] = cd.count();
  j["degrees"] = to_json(d);
  j["degree_set"] = d.degree_set();
  return j;
}

inline Json analysis_report(const PrimeGraph& g) {
  Json j;
  j["graph"] = to_json(g);
  Json comps = Json::array();
  for (const auto& c : connected_components(g)) comps.push_back(to_json(c));
  j["components"] = comps;
  j["connected"] = is_connected(g);
  j["cut_vertices"] = to_json(cut_vertices(g));
  j["complete_vertices"] = to_json(complete_vertices(g));
  return j;
}

inline Json orbits_report(const ModuleAction& action, const OrbitReport& r) {
  Json j;
  j["module"] = r.label;
  j["prime"] = action.prime();
  j["dimension"] = action.dimension();
  j["acting_order"] = r.acting_order;
  j["kernel_order"] = r.kernel_order;
  j["module_order"] = r.module_order;
  Json orbits = Json::array();
  for (const auto& o : r.orbits) {
    Json oj;
    oj["representative"] = action.coordinates(o.representative);
    oj["size"] = o.size;
    oj["stabilizer_order"] = o.stabilizer_order;
    oj["tag"] = {{"order", o.tag.order}, {"abelian", o.tag.abelian}, {"normal_sylow", to_json(o.tag.normal_sylow)}};
    orbits.push_back(oj);
  }
  j["orbits"] = orbits;
  j["delta_orb"] = to_json(delta_orb(r));
  return j;
}

inline Json nq_report(const ModuleAction& action, const NqReport& r) {
  Json j;
  j["module"] = r.label;
  j["q"] = r.q;
  j["divides_index"] = r.divides_index;
  j["satisfied"] = r.satisfied;
  Json failing = Json::array();
  for (u64 v : r.failing) failing.push_back(action.coordinates(v));
  j["failing"] = failing;
  return j;
}

inline Json vsets_report(const ModuleAction& action, const VSetDecomposition& d, const DichotomyResult* dich) {
  auto vecs = [&](const std::vector<u64>& codes) {
    Json a = Json::array();
    for (u64 v : codes) a.push_back(action.coordinates(v));
    return a;
  };
  Json j;
  j["module"] = d.label;
  j["r"] = d.r ? Json(*d.r) : Json(nullptr);
  j["s"] = d.s ? Json(*d.s) : Json(nullptr);
  j["t"] = d.t;
  j["V_I_minus"] = vecs(d.v_i_minus);
  j["V_I_plus"] = vecs(d.v_i_plus);
  j["V_II"] = vecs(d.v_ii);
  if (dich) {
    j["dichotomy"] = {{"holds", dich->holds},
                      {"prime", dich->witness_prime ? Json(*dich->witness_prime) : Json(nullptr)}};
  }
  return j;
}

inline Json verification_report(const VerificationReport& r) {
  auto edge_list = [](const std::vector<std::pair<u64, u64>>& es) {
    Json a = Json::array();
    for (auto [p, q] : es) a.push_back({p, q});
    return a;
  };
  Json j;
  j["witness"] = r.witness_id;
  j["case"] = to_json(r.declared);
  j["degrees"] = to_json(r.degrees);
  j["computed"] = to_json(r.computed);
  j["predicted"] = to_json(r.predicted);
  j["connected"] = r.connected;
  j["cut_vertices"] = to_json(r.cut_set);
  j["complete_vertices"] = to_json(r.complete_set);
  j["expected_vertices"] = to_json(r.expected_vertices);
  j["vertices_ok"] = r.vertices_ok;
  j["diff"] = {{"missing_vertices", r.diff.missing_vertices},
               {"extra_vertices", r.diff.extra_vertices},
               {"missing_edges", edge_list(r.diff.missing_edges)},
               {"extra_edges", edge_list(r.diff.extra_edges)}};
  j["pass"] = r.pass;
  return j;
}

}  // namespace cdg::io
