#pragma once

// The verification suite run by `cdgraph suite`: one check per acceptance
// criterion, each with a deterministic one-line detail.

#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cdgraph/chardeg.hpp"
#include "cdgraph/classes.hpp"
#include "cdgraph/classify.hpp"
#include "cdgraph/group.hpp"
#include "cdgraph/modact.hpp"
#include "cdgraph/module.hpp"
#include "cdgraph/numtheory.hpp"
#include "cdgraph/prime_graph.hpp"

namespace cdg::suite {

struct Check {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

namespace detail {

inline PrimeGraph path(u64 a, u64 mid, u64 b) { return PrimeGraph(PrimeSet{a, mid, b}, {{a, mid}, {mid, b}}); }

inline std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : "; ") + p;
  return out;
}

inline GroupPtr extraspecial_odd(u64 t) { return extraspecial_group(t, ExtraspecialType::heisenberg); }
inline GroupPtr q8() { return extraspecial_group(2, ExtraspecialType::quaternion); }

}  // namespace detail

inline Check sl2_graph_components() {
  Check c{1, "SL2(2^a) degree graph components", true, {}};
  std::vector<std::string> notes;
  for (unsigned a = 2; a <= 5; ++a) {
    const u64 q = u64{1} << a;
    DegreeMultiset d = sl2_degrees_closed_form(q);
    if (a <= 4) {
      const bool same = character_degrees(*sl2_group(q)) == d;
      c.pass = c.pass && same;
      if (!same) notes.push_back("q=" + std::to_string(q) + " class-algebra degrees differ from closed form");
    }
    const PrimeGraph g = degree_graph(d);
    const std::vector<PrimeSet> expected{PrimeSet{2}, prime_set(q - 1), prime_set(q + 1)};
    auto comps = connected_components(g);
    std::vector<PrimeSet> sorted = expected;
    std::sort(sorted.begin(), sorted.end(), [](const PrimeSet& x, const PrimeSet& y) { return x.values().front() < y.values().front(); });
    bool ok = comps == sorted;
    for (const auto& comp : comps) ok = ok && is_clique(g, comp);
    c.pass = c.pass && ok;
    std::ostringstream os;
    os << "q=" << q << ":";
    for (const auto& comp : comps) os << ' ' << comp;
    notes.push_back(os.str());
  }
  c.detail = detail::join(notes);
  return c;
}

inline Check catalogue_orbits() {
  Check c{2, "module catalogue orbit data", true, {}};
  struct Expect {
    const char* label;
    std::vector<std::pair<u64, u64>> orbits;  // (size, stabilizer order)
  };
  const std::vector<Expect> expect{{"V0", {{15, 4}}}, {"V1", {{5, 12}, {10, 6}}}, {"W", {{40, 3}, {40, 3}}}, {"U", {{24, 5}}}};
  std::vector<std::string> notes;
  for (const auto& e : expect) {
    const auto rep = orbit_report(module_catalog(e.label));
    std::vector<std::pair<u64, u64>> got;
    for (const auto& o : rep.orbits) got.emplace_back(o.size, o.stabilizer_order);
    const bool ok = got == e.orbits;
    c.pass = c.pass && ok;
    std::ostringstream os;
    os << e.label << ":";
    for (auto [s, st] : got) os << " " << s << "/" << st;
    notes.push_back(os.str());
  }
  c.detail = detail::join(notes);
  return c;
}

inline Check sylow_normalizers() {
  Check c{3, "Sylow 2-normalizer count", true, {}};
  std::vector<std::string> notes;
  for (auto [q, u] : std::vector<std::pair<u64, u64>>{{4, 3}, {8, 7}, {16, 3}, {16, 5}, {32, 31}}) {
    const std::size_t n = sylow_normalizer_count(q, u);
    c.pass = c.pass && n == 2;
    notes.push_back("(" + std::to_string(q) + "," + std::to_string(u) + ")=" + std::to_string(n));
  }
  c.detail = detail::join(notes);
  return c;
}

inline Check nq_conditions() {
  Check c{4, "condition N_q", true, {}};
  struct Expect {
    const char* label;
    u64 q;
    bool satisfied;
  };
  const std::vector<Expect> expect{{"V0", 2, true}, {"W", 3, true}, {"U", 5, true}, {"V1", 2, false}, {"V1", 3, false}};
  std::vector<std::string> notes;
  for (const auto& e : expect) {
    const bool got = check_Nq(module_catalog(e.label), e.q).satisfied;
    c.pass = c.pass && got == e.satisfied;
    notes.push_back(std::string(e.label) + " N" + std::to_string(e.q) + "=" + (got ? "yes" : "no"));
  }
  c.detail = detail::join(notes);
  return c;
}

inline Check type_dichotomy_check() {
  Check c{5, "type I/II dichotomy", true, {}};
  std::vector<std::string> notes;
  const std::vector<std::pair<ModuleAction, bool>> cases{
      {module_catalog("V1"), true}, {module_catalog("V0"), false}, {module_catalog("natural", 8), false}};
  for (const auto& [m, expected] : cases) {
    const bool got = type_dichotomy(m).holds;
    c.pass = c.pass && got == expected;
    notes.push_back(m.label() + (got ? " holds" : " fails"));
  }
  c.detail = detail::join(notes);
  return c;
}

inline Check extension_graphs() {
  Check c{6, "extension degree graphs", true, {}};
  std::vector<std::string> notes;
  auto graph_of = [](const char* label) { return degree_graph(character_degrees(*semidirect(module_catalog(label)))); };
  const PrimeGraph v1 = graph_of("V1"), w = graph_of("W"), v0 = graph_of("V0"), u = graph_of("U");
  const bool ok1 = v1 == detail::path(2, 5, 3);
  const bool ok2 = w == detail::path(3, 2, 5);
  const bool ok3 = connected_components(v0) == std::vector<PrimeSet>{PrimeSet{2}, PrimeSet{3, 5}} && v0.adjacent(3, 5);
  const bool ok4 = u.has_vertex(5) && u.degree(5) == 0 && u.adjacent(2, 3);
  c.pass = ok1 && ok2 && ok3 && ok4;
  notes = {"V1 " + v1.to_string(), "W " + w.to_string(), "V0 " + v0.to_string(), "U " + u.to_string()};
  c.detail = detail::join(notes);
  return c;
}

inline Check direct_product_witnesses() {
  Check c{7, "direct-product witnesses", true, {}};
  std::vector<std::string> notes;
  std::vector<PrimeGraph> graphs;
  for (u64 q : {2, 3, 5}) {
    GroupPtr r = q == 2 ? detail::q8() : detail::extraspecial_odd(q);
    GroupPtr g = direct_product(sl2_group(4), r);
    ClassificationCase cc;
    cc.tag = CaseTag::T2a;
    cc.a = 2;
    cc.p = q;
    cc.v_gk = PrimeSet{q};
    const auto rep = verify_witness(g->name(), *g, cc);
    c.pass = c.pass && rep.pass;
    graphs.push_back(rep.computed);
    notes.push_back(g->name() + (rep.pass ? " pass " : " FAIL ") + rep.computed.to_string());
  }
  c.pass = c.pass && graphs[0] == detail::path(3, 2, 5) && graphs[1] == detail::path(2, 3, 5) &&
           graphs[2] == detail::path(2, 5, 3);
  c.detail = detail::join(notes);
  return c;
}

inline Check prediction_sweep() {
  Check c{8, "T1 prediction sweep", true, {}};
  std::size_t count = 0;
  std::string first_failure;
  for (unsigned a = 3; a <= 8; ++a) {
    const PrimeSet odd_outer = prime_set(a) - PrimeSet{2};
    std::vector<PrimeSet> outers{PrimeSet{}};
    for (u64 r : odd_outer) {
      const std::size_t n = outers.size();
      for (std::size_t i = 0; i < n; ++i) outers.push_back(outers[i] | PrimeSet{r});
    }
    for (u64 p = 2; p <= 31; ++p) {
      if (!nt::is_prime(p)) continue;
      std::vector<ClassificationCase> cases;
      if (p == 2) {
        ClassificationCase cc;
        cc.tag = CaseTag::T1a;
        cc.a = a;
        cc.p = 2;
        cc.v_gk = PrimeSet{2};
        cases.push_back(cc);
        if (a % 2 == 0) {
          cc.pi_outer = PrimeSet{2};
          cases.push_back(cc);
        }
      } else {
        for (CaseTag t : {CaseTag::T1a, CaseTag::T1b})
          for (const auto& o : outers) {
            ClassificationCase cc;
            cc.tag = t;
            cc.a = a;
            cc.p = p;
            cc.pi_outer = o;
            cc.v_gk = PrimeSet{p};
            cases.push_back(cc);
          }
      }
      for (const auto& cc : cases) {
        const PrimeGraph g = predict_graph(cc);
        ++count;
        const bool ok = is_connected(g) && cut_vertices(g) == PrimeSet{p} && complete_vertices(g).contains(p);
        if (!ok && first_failure.empty()) first_failure = to_string(cc.tag) + " a=" + std::to_string(a) + " p=" + std::to_string(p);
        c.pass = c.pass && ok;
      }
    }
  }
  c.detail = std::to_string(count) + " parameterizations" + (first_failure.empty() ? "" : ", first failure " + first_failure);
  return c;
}

inline Check zsygmondy() {
  Check c{9, "Zsygmondy exceptions", true, {}};
  std::vector<std::string> empties;
  for (u64 m = 2; m <= 50; ++m)
    for (unsigned n = 2; n <= 12; ++n) {
      if (!primitive_prime_divisors(m, n).empty()) continue;
      empties.push_back("(" + std::to_string(m) + "," + std::to_string(n) + ")");
      const bool mersenne = n == 2 && is_prime_power(m + 1) && is_prime_power(m + 1)->prime == 2;
      const bool exceptional = (m == 2 && n == 6) || mersenne;
      c.pass = c.pass && exceptional;
    }
  // Every exceptional pair in range must be empty.
  for (u64 m = 2; m <= 50; ++m) {
    const bool mersenne = is_prime_power(m + 1) && is_prime_power(m + 1)->prime == 2;
    if (mersenne) c.pass = c.pass && primitive_prime_divisors(m, 2).empty();
  }
  c.pass = c.pass && primitive_prime_divisors(2, 6).empty();
  c.detail = "empty at " + detail::join(empties);
  return c;
}

inline Check triality() {
  Check c{10, "triality fixed space", true, {}};
  const std::size_t d1 = triality_fixed_space_dim(1), d2 = triality_fixed_space_dim(2);
  // Sign vectors e with e1 + 2 e2 + 4 e3 = 0 mod 3.
  std::size_t signs = 0;
  for (int mask = 0; mask < 8; ++mask) {
    long long s = 0;
    for (int j = 0; j < 3; ++j) s += ((mask >> j) & 1 ? -1 : 1) * (1LL << j);
    if (((s % 3) + 3) % 3 == 0) ++signs;
  }
  c.pass = d1 >= 1 && d2 >= 1 && d1 == signs;
  c.detail = "c=1 dim " + std::to_string(d1) + " (sign count " + std::to_string(signs) + "), c=2 dim " + std::to_string(d2);
  return c;
}

inline std::vector<std::pair<std::string, GroupPtr>> dixon_corpus() {
  return {{"SL2(4)", sl2_group(4)},
          {"SL2(5)", sl2_group(5)},
          {"SL2(8)", sl2_group(8)},
          {"SL2(16)", sl2_group(16)},
          {"V0 ext", semidirect(module_catalog("V0"))},
          {"V1 ext", semidirect(module_catalog("V1"))},
          {"W ext", semidirect(module_catalog("W"))},
          {"U ext", semidirect(module_catalog("U"))},
          {"natural(8) ext", semidirect(module_catalog("natural", 8))},
          {"SL2(4) x C5", direct_product(sl2_group(4), cyclic_group(5))},
          {"SL2(4) x Q8", direct_product(sl2_group(4), detail::q8())},
          {"SL2(4) x 3^(1+2)", direct_product(sl2_group(4), detail::extraspecial_odd(3))},
          {"SL2(4) x 5^(1+2)", direct_product(sl2_group(4), detail::extraspecial_odd(5))},
          {"SL2(8) x Q8", direct_product(sl2_group(8), detail::q8())},
          {"SL2(8) x 3^(1+2)", direct_product(sl2_group(8), detail::extraspecial_odd(3))}};
}

inline Check dixon_invariants() {
  Check c{11, "class-algebra invariants", true, {}};
  std::vector<std::string> notes;
  for (const auto& [name, g] : dixon_corpus()) {
    const ClassData cd = conjugacy_classes(*g);
    const u64 e = group_exponent(*g, cd);
    const DegreeMultiset d1 = character_degrees(*g, cd, dixon_prime(g->order(), e, 0));
    const DegreeMultiset d2 = character_degrees(*g, cd, dixon_prime(g->order(), e, 1));
    const bool ok = d1 == d2 && d1.sum_of_squares() == g->order() && d1.count() == cd.count();
    c.pass = c.pass && ok;
    if (!ok) notes.push_back(name + " FAIL");
  }
  c.detail = notes.empty() ? std::to_string(dixon_corpus().size()) + " groups" : detail::join(notes);
  return c;
}

inline Check stretch() {
  Check c{12, "SL2(16) 2^8-module extension degrees", true, {}};
  const GroupPtr g = semidirect(module_catalog("twisted", 16));
  const auto set = character_degrees(*g).degree_set();
  c.pass = g->order() == 1044480 && set == std::vector<u64>{1, 15, 16, 17, 51, 68, 204, 255, 272, 340};
  std::ostringstream os;
  os << "order " << g->order() << ", degree set {";
  for (std::size_t i = 0; i < set.size(); ++i) os << (i ? "," : "") << set[i];
  os << "}";
  c.detail = os.str();
  return c;
}

inline std::vector<Check> run(bool include_long) {
  std::vector<std::function<Check()>> checks{sl2_graph_components, catalogue_orbits, sylow_normalizers, nq_conditions,
                                             type_dichotomy_check, extension_graphs, direct_product_witnesses,
                                             prediction_sweep, zsygmondy, triality, dixon_invariants};
  if (include_long) checks.push_back(stretch);
  std::vector<Check> out;
  for (const auto& f : checks) {
    try {
      out.push_back(f());
    } catch (const Error& e) {
      out.push_back({static_cast<int>(out.size()) + 1, "error", false, e.what()});
    }
  }
  return out;
}

}  // namespace cdg::suite
