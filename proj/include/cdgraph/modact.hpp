#pragma once

// Orbits and point stabilizers of module actions, the orbit graph, the
// normal-Sylow conditions on stabilizers, Sylow 2-normalizers in SL2(2^a)
// and the fixed space of the diagonal triality element.

#include <algorithm>
#include <array>
#include <cstdint>
#include <iterator>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cdgraph/error.hpp"
#include "cdgraph/gf.hpp"
#include "cdgraph/group.hpp"
#include "cdgraph/module.hpp"
#include "cdgraph/numtheory.hpp"
#include "cdgraph/prime_graph.hpp"

namespace cdg {

// Coarse isomorphism fingerprint of a subgroup.
struct StabilizerTag {
  u64 order = 0;
  bool abelian = false;
  PrimeSet normal_sylow;  // primes q with a normal Sylow q-subgroup
  friend bool operator==(const StabilizerTag&, const StabilizerTag&) = default;
};

struct Orbit {
  u64 representative = 0;         // least vector code in the orbit
  u64 size = 0;
  u64 stabilizer_order = 0;       // |C_H(v)| / |kernel|
  StabilizerTag tag;
  std::vector<u64> members;       // ascending
  std::vector<Index> stabilizer;  // C_H(representative), ascending index
};

struct OrbitReport {
  std::string label;
  u64 acting_order = 0;
  u64 kernel_order = 0;
  u64 module_order = 0;
  std::vector<Orbit> orbits;  // by (size, representative)
  static constexpr std::uint32_t kZero = UINT32_MAX;
  std::vector<std::uint32_t> orbit_of;  // vector code -> orbit position

  const Orbit& orbit_containing(u64 v) const {
    if (v == 0 || v >= module_order) throw InvalidArgument("orbit_containing: not a nonzero vector of the module");
    return orbits[orbit_of[v]];
  }
};

namespace detail {

inline std::vector<u64> element_orders(const FiniteGroup& h, const std::vector<Index>& elems) {
  std::vector<u64> out;
  out.reserve(elems.size());
  for (Index x : elems) out.push_back(h.element_order(x));
  return out;
}

inline bool is_power_of(u64 n, u64 q) {
  while (n % q == 0) n /= q;
  return n == 1;
}

// A finite group C has a normal Sylow q-subgroup iff its q-elements number
// exactly |C|_q.
inline bool has_normal_sylow(const std::vector<u64>& orders, u64 q) {
  const u64 part = nt::p_part(orders.size(), q);
  const auto qcount = static_cast<u64>(std::count_if(orders.begin(), orders.end(), [&](u64 o) { return is_power_of(o, q); }));
  return qcount == part;
}

inline StabilizerTag make_tag(const FiniteGroup& h, const std::vector<Index>& elems) {
  StabilizerTag tag;
  tag.order = elems.size();
  tag.abelian = true;
  for (std::size_t i = 0; i < elems.size() && tag.abelian; ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j)
      if (h.multiply(elems[i], elems[j]) != h.multiply(elems[j], elems[i])) {
        tag.abelian = false;
        break;
      }
  const auto orders = element_orders(h, elems);
  std::vector<u64> normal;
  if (tag.order > 1)
    for (u64 q : prime_set(tag.order))
      if (has_normal_sylow(orders, q)) normal.push_back(q);
  tag.normal_sylow = PrimeSet(std::move(normal));
  return tag;
}

}  // namespace detail

inline OrbitReport orbit_report(const ModuleAction& action) {
  const FiniteGroup& h = *action.group();
  const u64 n = action.module_order();
  OrbitReport rep;
  rep.label = action.label();
  rep.acting_order = h.order();
  rep.kernel_order = action.kernel().size();
  rep.module_order = n;
  rep.orbit_of.assign(n, OrbitReport::kZero);
  std::vector<char> seen(n, 0);
  seen[0] = 1;
  std::vector<Orbit> orbits;
  for (u64 v = 1; v < n; ++v) {
    if (seen[v]) continue;
    std::vector<u64> members{v};
    seen[v] = 1;
    for (std::size_t head = 0; head < members.size(); ++head)
      for (Index s : h.generators()) {
        const u64 w = action.apply(s, members[head]);
        if (!seen[w]) {
          seen[w] = 1;
          members.push_back(w);
        }
      }
    std::sort(members.begin(), members.end());
    Orbit o;
    o.representative = members.front();
    o.size = members.size();
    for (Index x = 0; x < h.order(); ++x)
      if (action.apply(x, o.representative) == o.representative) o.stabilizer.push_back(x);
    if (o.stabilizer.size() * o.size != h.order()) throw InternalError("orbit_report: orbit-stabilizer mismatch");
    o.stabilizer_order = o.stabilizer.size() / rep.kernel_order;
    o.tag = detail::make_tag(h, o.stabilizer);
    o.members = std::move(members);
    orbits.push_back(std::move(o));
  }
  std::sort(orbits.begin(), orbits.end(), [](const Orbit& a, const Orbit& b) {
    return a.size != b.size ? a.size < b.size : a.representative < b.representative;
  });
  for (std::size_t i = 0; i < orbits.size(); ++i)
    for (u64 v : orbits[i].members) rep.orbit_of[v] = static_cast<std::uint32_t>(i);
  rep.orbits = std::move(orbits);
  return rep;
}

// Orbit graph: primes dividing some orbit size, adjacent when both divide a
// single orbit size.
inline PrimeGraph delta_orb(const OrbitReport& report) {
  std::vector<u64> sizes;
  for (const auto& o : report.orbits) sizes.push_back(o.size);
  return graph_from_numbers(sizes);
}

inline PrimeGraph delta_orb(const ModuleAction& action) { return delta_orb(orbit_report(action)); }

// C_H(v) contains a full Sylow q-subgroup of H as a normal subgroup.
inline bool stabilizer_has_normal_full_sylow(const FiniteGroup& h, const Orbit& orbit, u64 q) {
  if (nt::p_part(orbit.stabilizer.size(), q) != nt::p_part(h.order(), q)) return false;
  return orbit.tag.normal_sylow.contains(q) || nt::p_part(h.order(), q) == 1;
}

struct NqReport {
  std::string label;
  u64 q = 0;
  bool divides_index = false;  // q | |H : C_H(V)|
  bool satisfied = false;
  std::vector<u64> failing;  // nonzero vectors violating the stabilizer condition
};

inline NqReport check_Nq(const ModuleAction& action, const OrbitReport& report, u64 q) {
  if (!nt::is_prime(q)) throw InvalidArgument("check_Nq: q must be prime");
  const FiniteGroup& h = *action.group();
  NqReport r;
  r.label = action.label();
  r.q = q;
  r.divides_index = (h.order() / action.kernel().size()) % q == 0;
  for (const auto& o : report.orbits)
    if (!stabilizer_has_normal_full_sylow(h, o, q)) r.failing.insert(r.failing.end(), o.members.begin(), o.members.end());
  std::sort(r.failing.begin(), r.failing.end());
  r.satisfied = r.divides_index && r.failing.empty();
  return r;
}

inline NqReport check_Nq(const ModuleAction& action, u64 q) { return check_Nq(action, orbit_report(action), q); }

struct VSetDecomposition {
  std::string label;
  std::optional<u64> r;  // odd prime dividing q - 1
  std::optional<u64> s;  // odd prime dividing q + 1
  u64 t = 0;             // characteristic of SL2(q)
  std::vector<u64> v_i_minus, v_i_plus, v_ii;  // ascending vector codes
  // Per orbit (report order): membership in V_I-, V_I+, V_II.
  std::vector<std::array<bool, 3>> orbit_membership;

  // V_I- u V_I+.
  std::vector<u64> v_i() const {
    std::vector<u64> out;
    std::set_union(v_i_minus.begin(), v_i_minus.end(), v_i_plus.begin(), v_i_plus.end(), std::back_inserter(out));
    return out;
  }
};

inline VSetDecomposition v_set_decomposition(const ModuleAction& action, const OrbitReport& report,
                                             std::optional<u64> r, std::optional<u64> s) {
  const FiniteGroup& h = *action.group();
  if (!h.info().sl2_q) throw InvalidArgument("v_set_decomposition: acting group must be SL2(q)");
  const u64 q = *h.info().sl2_q;
  const u64 t = is_prime_power(q)->prime;
  if (r && (*r == 2 || !nt::is_prime(*r) || (q - 1) % *r != 0)) {
    throw InvalidArgument("v_set_decomposition: r must be an odd prime dividing q - 1");
  }
  if (s && (*s == 2 || !nt::is_prime(*s) || (q + 1) % *s != 0)) {
    throw InvalidArgument("v_set_decomposition: s must be an odd prime dividing q + 1");
  }
  VSetDecomposition d;
  d.label = action.label();
  d.r = r;
  d.s = s;
  d.t = t;
  for (const auto& o : report.orbits) {
    const bool im = r && stabilizer_has_normal_full_sylow(h, o, *r);
    const bool ip = s && stabilizer_has_normal_full_sylow(h, o, *s);
    const bool ii = stabilizer_has_normal_full_sylow(h, o, t);
    d.orbit_membership.push_back({im, ip, ii});
    if (im) d.v_i_minus.insert(d.v_i_minus.end(), o.members.begin(), o.members.end());
    if (ip) d.v_i_plus.insert(d.v_i_plus.end(), o.members.begin(), o.members.end());
    if (ii) d.v_ii.insert(d.v_ii.end(), o.members.begin(), o.members.end());
  }
  for (auto* v : {&d.v_i_minus, &d.v_i_plus, &d.v_ii}) std::sort(v->begin(), v->end());
  return d;
}

inline VSetDecomposition v_set_decomposition(const ModuleAction& action, std::optional<u64> r, std::optional<u64> s) {
  return v_set_decomposition(action, orbit_report(action), r, s);
}

// Whether some odd prime r | q^2 - 1 gives V - {0} = V_I(r) u V_II with
// both parts nonempty, V_I(r) being the vectors whose stabilizer has a
// normal full Sylow r-subgroup.
struct DichotomyResult {
  bool holds = false;
  std::optional<u64> witness_prime;
};

inline DichotomyResult type_dichotomy(const ModuleAction& action, const OrbitReport& report) {
  const FiniteGroup& h = *action.group();
  if (!h.info().sl2_q) throw InvalidArgument("type_dichotomy: acting group must be SL2(q)");
  const u64 q = *h.info().sl2_q;
  const u64 t = is_prime_power(q)->prime;
  if (action.prime() != t) throw InvalidArgument("type_dichotomy: module must be in the defining characteristic");
  for (u64 r : prime_set(q * q - 1)) {
    if (r == 2) continue;
    bool any_i = false, any_ii = false, covered = true;
    for (const auto& o : report.orbits) {
      const bool i = stabilizer_has_normal_full_sylow(h, o, r);
      const bool ii = stabilizer_has_normal_full_sylow(h, o, t);
      any_i = any_i || i;
      any_ii = any_ii || ii;
      covered = covered && (i || ii);
    }
    if (any_i && any_ii && covered) return {true, r};
  }
  return {};
}

inline DichotomyResult type_dichotomy(const ModuleAction& action) { return type_dichotomy(action, orbit_report(action)); }

// Subgroups of prime order u of g, one per subgroup, ordered by the least
// code of a generator.
inline std::vector<Subgroup> prime_order_subgroups(const FiniteGroup& g, u64 u) {
  if (!nt::is_prime(u)) throw InvalidArgument("prime_order_subgroups: u must be prime");
  std::vector<char> used(g.order(), 0);
  std::vector<Subgroup> out;
  for (Index x = 0; x < g.order(); ++x) {
    if (used[x] || g.element_order(x) != u) continue;
    Subgroup s = generated_subgroup(g, {x});
    for (Index y : s.elements) used[y] = 1;
    out.push_back(std::move(s));
  }
  return out;
}

// Number of Sylow 2-subgroups T of SL2(q), q even, with U inside N(T).
inline std::size_t sylow_normalizer_count(const FiniteGroup& sl2, const std::vector<Subgroup>& sylows, u64 u,
                                          const Subgroup& sub) {
  if (!sl2.info().sl2_q || *sl2.info().sl2_q % 2 != 0) {
    throw InvalidArgument("sylow_normalizer_count: group must be SL2(q) with q even");
  }
  const u64 q = *sl2.info().sl2_q;
  if (!nt::is_prime(u) || (q - 1) % u != 0) throw InvalidArgument("sylow_normalizer_count: u must be a prime dividing q - 1");
  if (sub.order() < 2 || !detail::is_power_of(sub.order(), u)) {
    throw InvalidArgument("sylow_normalizer_count: U must be a nontrivial u-subgroup");
  }
  std::size_t count = 0;
  for (const Subgroup& t : sylows)
    if (normalizes(sl2, sub, t)) ++count;
  return count;
}

inline std::size_t sylow_normalizer_count(const FiniteGroup& sl2, u64 u, const Subgroup& sub) {
  return sylow_normalizer_count(sl2, sylow2_subgroups_sl2(sl2), u, sub);
}

// Default U: the first subgroup of order u.
inline std::size_t sylow_normalizer_count(u64 q, u64 u, std::size_t ceiling = kDefaultCeiling) {
  auto g = sl2_group(q, ceiling);
  if (!nt::is_prime(u) || q % 2 != 0 || (q - 1) % u != 0) {
    throw InvalidArgument("sylow_normalizer_count: need q even and u a prime dividing q - 1");
  }
  Index x = 0;
  while (g->element_order(x) != u) ++x;
  return sylow_normalizer_count(*g, u, generated_subgroup(*g, {x}));
}

// Eigenvalue-1 multiplicity of diag(mu, mu^-1) (x) diag(mu^(2^c), mu^-(2^c))
// (x) diag(mu^(2^2c), mu^-(2^2c)) over GF(2^(6c)), mu of order 2^2c - 2^c + 1.
inline std::size_t triality_fixed_space_dim(unsigned c) {
  if (c < 1 || c > 2) throw InvalidArgument("triality_fixed_space_dim: c must be 1 or 2");
  auto field = field_make(2, 6 * c);
  const Field& f = *field;
  const u64 ord = (u64{1} << (2 * c)) - (u64{1} << c) + 1;
  if ((f.order() - 1) % ord != 0) throw InternalError("triality: no element of the required order");
  const FieldValue mu = f.pow(f.generator(), static_cast<std::int64_t>((f.order() - 1) / ord));
  if (f.element_order(mu) != ord) throw InternalError("triality: wrong element order");
  Matrix m = Matrix::identity(1);
  for (unsigned j = 0; j < 3; ++j) {
    const auto e = static_cast<std::int64_t>(u64{1} << (j * c));
    Matrix d(2, 2);
    d(0, 0) = f.pow(mu, e);
    d(1, 1) = f.pow(mu, -e);
    m = linalg::kronecker(f, m, d);
  }
  for (std::size_t i = 0; i < m.rows; ++i) m(i, i) = f.sub(m(i, i), 1);
  return linalg::nullity(f, m);
}

}  // namespace cdg
