#pragma once

// Cases of the classification of groups with a composition factor SL2(2^a)
// whose degree graph is connected with a cut vertex, the graph each case
// predicts, and verification of concrete witness groups.

#include <algorithm>
#include <iterator>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cdgraph/chardeg.hpp"
#include "cdgraph/classes.hpp"
#include "cdgraph/error.hpp"
#include "cdgraph/group.hpp"
#include "cdgraph/numtheory.hpp"
#include "cdgraph/prime_graph.hpp"

namespace cdg {

enum class CaseTag { T1a, T1b, T2a, T2b_i, T2b_ii, T2c_i, T2c_ii };

inline std::string to_string(CaseTag t) {
  switch (t) {
    case CaseTag::T1a: return "T1a";
    case CaseTag::T1b: return "T1b";
    case CaseTag::T2a: return "T2a";
    case CaseTag::T2b_i: return "T2b_i";
    case CaseTag::T2b_ii: return "T2b_ii";
    case CaseTag::T2c_i: return "T2c_i";
    case CaseTag::T2c_ii: return "T2c_ii";
  }
  throw InvalidArgument("unknown case tag");
}

inline CaseTag case_tag_from_string(const std::string& s) {
  for (CaseTag t : {CaseTag::T1a, CaseTag::T1b, CaseTag::T2a, CaseTag::T2b_i, CaseTag::T2b_ii, CaseTag::T2c_i,
                    CaseTag::T2c_ii})
    if (to_string(t) == s) return t;
  throw InvalidArgument("unknown case tag '" + s + "'");
}

inline bool is_t1_case(CaseTag t) { return t == CaseTag::T1a || t == CaseTag::T1b; }

struct ClassificationCase {
  CaseTag tag = CaseTag::T1a;
  unsigned a = 2;        // S = SL2(2^a); fixed to 2 for the T2 cases
  u64 p = 2;             // the cut vertex
  PrimeSet pi_outer;     // pi(G/KR)
  PrimeSet v_gk;         // V(G/K)
  bool k_is_sl2_5 = false;  // T2a only: K = SL2(5) rather than SL2(4)
};

// Throws InvalidArgument when the parameters violate the case constraints.
inline void validate(const ClassificationCase& c) {
  if (!nt::is_prime(c.p)) throw InvalidArgument("case: p must be prime");
  const PrimeSet p_only{c.p};
  if (is_t1_case(c.tag)) {
    if (c.a < 3) throw InvalidArgument("case: T1 cases need a >= 3");
    if (c.a > 16) throw InvalidArgument("case: a is limited to 16");
    if (!c.pi_outer.is_subset_of(prime_set(c.a))) {
      throw InvalidArgument("case: pi(G/KR) must divide |Out(S)| = a");
    }
    if (c.k_is_sl2_5) throw InvalidArgument("case: k_is_sl2_5 applies to T2a only");
    const bool p_two_ok = c.tag == CaseTag::T1a && c.p == 2;
    if (p_two_ok) {
      if ((c.v_gk | c.pi_outer) != PrimeSet{2}) throw InvalidArgument("case: T1a with p = 2 needs V(G/K) u pi(G/KR) = {2}");
      return;
    }
    if (c.p == 2) throw InvalidArgument("case: T1b needs p != 2");
    if (c.v_gk != p_only) throw InvalidArgument("case: V(G/K) must equal {p}");
    if (c.pi_outer.contains(2)) throw InvalidArgument("case: |G/KR| must be odd");
    return;
  }
  if (c.a != 2) throw InvalidArgument("case: T2 cases have a = 2");
  if (!c.pi_outer.is_subset_of(PrimeSet{2})) throw InvalidArgument("case: pi(G/KR) must lie in {2}");
  if (c.k_is_sl2_5 && c.tag != CaseTag::T2a) throw InvalidArgument("case: k_is_sl2_5 applies to T2a only");
  switch (c.tag) {
    case CaseTag::T2a:
      if (c.v_gk != p_only) throw InvalidArgument("case: T2a needs V(G/K) = {p}");
      if (c.p == 5 && c.k_is_sl2_5) throw InvalidArgument("case: T2a with p = 5 needs K = SL2(4)");
      break;
    case CaseTag::T2b_i:
      if (c.p == 2) throw InvalidArgument("case: T2b_i needs p != 2");
      if (c.v_gk != p_only) throw InvalidArgument("case: T2b_i needs V(G/K) = {p}");
      break;
    case CaseTag::T2b_ii:
      if (c.p != 5) throw InvalidArgument("case: T2b_ii forces p = 5");
      if (!c.v_gk.is_subset_of(PrimeSet{5})) throw InvalidArgument("case: T2b_ii needs V(G/K) in {5}");
      break;
    case CaseTag::T2c_i:
      if (c.p == 5) throw InvalidArgument("case: T2c_i needs p != 5");
      if (c.v_gk != p_only) throw InvalidArgument("case: T2c_i needs V(G/K) = {p}");
      break;
    case CaseTag::T2c_ii:
      if (c.p != 2) throw InvalidArgument("case: T2c_ii forces p = 2");
      if (!c.v_gk.is_subset_of(PrimeSet{2})) throw InvalidArgument("case: T2c_ii needs V(G/K) in {2}");
      break;
    default:
      break;
  }
}

namespace detail {

inline void add_clique(PrimeGraph& g, const PrimeSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) g.add_edge(s.values()[i], s.values()[j]);
}

}  // namespace detail

inline PrimeGraph predict_graph(const ClassificationCase& c) {
  validate(c);
  const PrimeSet p_only{c.p};
  if (is_t1_case(c.tag)) {
    const u64 q = u64{1} << c.a;
    const PrimeSet minus = prime_set(q - 1), plus = prime_set(q + 1);
    if (c.tag == CaseTag::T1a && c.p == 2) {
      PrimeGraph g(minus | plus | PrimeSet{2}, {});
      detail::add_clique(g, minus | PrimeSet{2});
      detail::add_clique(g, plus | PrimeSet{2});
      return g;
    }
    const PrimeSet pi0 = c.pi_outer | p_only;
    if (c.tag == CaseTag::T1a) {
      PrimeGraph g(minus | plus | pi0 | PrimeSet{2}, {});
      detail::add_clique(g, (minus - pi0) | pi0);
      detail::add_clique(g, (plus - pi0) | pi0);
      g.add_edge(2, c.p);
      return g;
    }
    const PrimeSet rest = minus | plus | pi0;
    PrimeGraph g(rest | PrimeSet{2}, {});
    detail::add_clique(g, rest);
    g.add_edge(2, c.p);
    return g;
  }
  PrimeGraph g(PrimeSet{2, 3, 5} | p_only, {});
  switch (c.tag) {
    case CaseTag::T2a:
      if (c.k_is_sl2_5) g.add_edge(2, 3);
      break;
    case CaseTag::T2b_i:
    case CaseTag::T2b_ii:
      g.add_edge(3, 5);
      break;
    case CaseTag::T2c_i:
    case CaseTag::T2c_ii:
      g.add_edge(2, 3);
      break;
    default:
      break;
  }
  for (u64 v : g.vertices())
    if (v != c.p && !g.adjacent(v, c.p)) g.add_edge(v, c.p);
  return g;
}

struct GraphDiff {
  std::vector<u64> missing_vertices, extra_vertices;  // relative to the prediction
  std::vector<std::pair<u64, u64>> missing_edges, extra_edges;
  bool empty() const {
    return missing_vertices.empty() && extra_vertices.empty() && missing_edges.empty() && extra_edges.empty();
  }
};

inline GraphDiff graph_diff(const PrimeGraph& computed, const PrimeGraph& predicted) {
  GraphDiff d;
  auto both = [](const auto& a, const auto& b, auto& out) {
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  };
  both(predicted.vertices().values(), computed.vertices().values(), d.missing_vertices);
  both(computed.vertices().values(), predicted.vertices().values(), d.extra_vertices);
  const auto ce = computed.edges(), pe = predicted.edges();
  both(pe, ce, d.missing_edges);
  both(ce, pe, d.extra_edges);
  return d;
}

struct VerificationReport {
  std::string witness_id;
  ClassificationCase declared;
  DegreeMultiset degrees;
  PrimeGraph computed, predicted;
  bool connected = false;
  PrimeSet cut_set, complete_set;
  PrimeSet expected_vertices;  // pi(G/R) u {p}
  bool vertices_ok = false;
  GraphDiff diff;
  bool pass = false;
};

inline VerificationReport verify_witness(const std::string& id, const FiniteGroup& g, const ClassificationCase& c) {
  VerificationReport r;
  r.witness_id = id;
  r.declared = c;
  r.predicted = predict_graph(c);
  r.degrees = character_degrees(g);
  r.computed = degree_graph(r.degrees);
  r.connected = is_connected(r.computed);
  r.cut_set = cut_vertices(r.computed);
  r.complete_set = complete_vertices(r.computed);
  r.expected_vertices = g.info().radical_quotient_primes | PrimeSet{c.p};
  r.vertices_ok = r.computed.vertices() == r.expected_vertices;
  r.diff = graph_diff(r.computed, r.predicted);
  r.pass = r.diff.empty() && r.connected && r.cut_set == PrimeSet{c.p} && r.complete_set.contains(c.p) && r.vertices_ok;
  return r;
}

}  // namespace cdg
