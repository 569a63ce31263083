#include <gtest/gtest.h>

#include "cdgraph/modact.hpp"
#include "oracles.hpp"

using cdg::Index;
using cdg::ModuleAction;
using cdg::PrimeGraph;
using cdg::PrimeSet;
using cdg::u64;

namespace {

std::vector<ModuleAction> catalogue() {
  return {cdg::module_catalog("V0"),          cdg::module_catalog("V1"),          cdg::module_catalog("W"),
          cdg::module_catalog("U"),           cdg::module_catalog("natural", 8),  cdg::module_catalog("natural", 16),
          cdg::module_catalog("twisted", 4)};
}

std::vector<Index> stabilizer_by_scan(const ModuleAction& m, u64 v) {
  std::vector<Index> out;
  for (Index h = 0; h < m.group()->order(); ++h)
    if (m.apply(h, v) == v) out.push_back(h);
  return out;
}

// C has a normal Sylow q-subgroup of order |H|_q: the q-elements of C
// generate a group of exactly that order.
bool normal_full_sylow_oracle(const cdg::FiniteGroup& h, const std::vector<Index>& c, u64 q) {
  const u64 full = cdg::nt::p_part(h.order(), q);
  if (cdg::nt::p_part(c.size(), q) != full) return false;
  std::vector<Index> qelems;
  for (Index x : c) {
    u64 o = h.element_order(x);
    while (o % q == 0) o /= q;
    if (o == 1) qelems.push_back(x);
  }
  return cdg::generated_subgroup(h, qelems).order() == full;
}

std::vector<std::pair<u64, u64>> size_stab(const cdg::OrbitReport& r) {
  std::vector<std::pair<u64, u64>> out;
  for (const auto& o : r.orbits) out.emplace_back(o.size, o.stabilizer_order);
  return out;
}

}  // namespace

TEST(Orbits, CatalogueData) {
  using V = std::vector<std::pair<u64, u64>>;
  EXPECT_EQ(size_stab(cdg::orbit_report(cdg::module_catalog("V0"))), (V{{15, 4}}));
  EXPECT_EQ(size_stab(cdg::orbit_report(cdg::module_catalog("V1"))), (V{{5, 12}, {10, 6}}));
  EXPECT_EQ(size_stab(cdg::orbit_report(cdg::module_catalog("W"))), (V{{40, 3}, {40, 3}}));
  EXPECT_EQ(size_stab(cdg::orbit_report(cdg::module_catalog("U"))), (V{{24, 5}}));
  EXPECT_EQ(size_stab(cdg::orbit_report(cdg::module_catalog("natural", 8))), (V{{63, 8}}));
}

TEST(Orbits, StabilizerTags) {
  auto r = cdg::orbit_report(cdg::module_catalog("V1"));
  // A4 then S3.
  EXPECT_EQ(r.orbits[0].tag, (cdg::StabilizerTag{12, false, PrimeSet{2}}));
  EXPECT_EQ(r.orbits[1].tag, (cdg::StabilizerTag{6, false, PrimeSet{3}}));
  auto u = cdg::orbit_report(cdg::module_catalog("U"));
  EXPECT_EQ(u.orbits[0].tag, (cdg::StabilizerTag{5, true, PrimeSet{5}}));
}

TEST(Orbits, Invariants) {
  for (const auto& m : catalogue()) {
    const auto r = cdg::orbit_report(m);
    const u64 h = m.group()->order();
    u64 total = 0;
    for (std::size_t i = 0; i < r.orbits.size(); ++i) {
      const auto& o = r.orbits[i];
      total += o.size;
      EXPECT_EQ(o.size * o.stabilizer_order, h / r.kernel_order) << m.label();
      EXPECT_EQ(h % o.size, 0U);
      EXPECT_EQ(o.members.size(), o.size);
      EXPECT_EQ(o.members.front(), o.representative);
      for (u64 v : o.members) EXPECT_EQ(r.orbit_of[v], i);
      // Stabilizers of other members are conjugate, so have the same order.
      EXPECT_EQ(stabilizer_by_scan(m, o.members.back()).size(), o.stabilizer.size()) << m.label();
    }
    EXPECT_EQ(total, m.module_order() - 1) << m.label();
    EXPECT_EQ(r.module_order, m.module_order());
  }
}

TEST(Orbits, OrbitContaining) {
  auto r = cdg::orbit_report(cdg::module_catalog("V1"));
  EXPECT_EQ(r.orbit_containing(r.orbits[1].members[3]).size, 10U);
  EXPECT_THROW(r.orbit_containing(0), cdg::InvalidArgument);
  EXPECT_THROW(r.orbit_containing(16), cdg::InvalidArgument);
}

TEST(DeltaOrb, Examples) {
  EXPECT_EQ(cdg::delta_orb(cdg::module_catalog("V0")), PrimeGraph({3, 5}, {{3, 5}}));
  EXPECT_EQ(cdg::delta_orb(cdg::module_catalog("V1")), PrimeGraph({2, 5}, {{2, 5}}));
  EXPECT_EQ(cdg::delta_orb(cdg::module_catalog("U")), PrimeGraph({2, 3}, {{2, 3}}));
  EXPECT_EQ(cdg::delta_orb(cdg::module_catalog("W")), PrimeGraph({2, 5}, {{2, 5}}));
}

// The natural module is transitive on nonzero vectors: one clique on pi(q^2 - 1).
TEST(DeltaOrb, NaturalModules) {
  for (u64 q : {4U, 8U, 16U}) {
    auto g = cdg::delta_orb(cdg::module_catalog("natural", q));
    EXPECT_EQ(g.vertices(), cdg::prime_set(q * q - 1));
    EXPECT_TRUE(cdg::is_clique(g, g.vertices()));
  }
}

TEST(Nq, Examples) {
  EXPECT_TRUE(cdg::check_Nq(cdg::module_catalog("V0"), 2).satisfied);
  EXPECT_TRUE(cdg::check_Nq(cdg::module_catalog("W"), 3).satisfied);
  EXPECT_TRUE(cdg::check_Nq(cdg::module_catalog("U"), 5).satisfied);
  auto v1 = cdg::check_Nq(cdg::module_catalog("V1"), 2);
  EXPECT_FALSE(v1.satisfied);
  EXPECT_EQ(v1.failing.size(), 10U);
  EXPECT_FALSE(cdg::check_Nq(cdg::module_catalog("V1"), 3).satisfied);
  auto u7 = cdg::check_Nq(cdg::module_catalog("U"), 7);
  EXPECT_FALSE(u7.divides_index);
  EXPECT_FALSE(u7.satisfied);
  EXPECT_THROW(cdg::check_Nq(cdg::module_catalog("U"), 4), cdg::InvalidArgument);
}

// Every vector is tested directly against a subgroup-generation oracle.
TEST(Nq, AgreesWithOracleOnEveryVector) {
  for (const auto& m : catalogue()) {
    if (m.module_order() > 256) continue;
    const auto r = cdg::orbit_report(m);
    for (u64 q : cdg::prime_set(m.group()->order())) {
      const auto nq = cdg::check_Nq(m, r, q);
      std::vector<u64> failing;
      for (u64 v = 1; v < m.module_order(); ++v)
        if (!normal_full_sylow_oracle(*m.group(), stabilizer_by_scan(m, v), q)) failing.push_back(v);
      EXPECT_EQ(nq.failing, failing) << m.label() << " q=" << q;
      EXPECT_EQ(nq.satisfied, failing.empty()) << m.label() << " q=" << q;
    }
  }
}

TEST(VSets, V1) {
  auto d = cdg::v_set_decomposition(cdg::module_catalog("V1"), 3, 5);
  EXPECT_EQ(d.t, 2U);
  EXPECT_EQ(d.v_i_minus.size(), 10U);
  EXPECT_TRUE(d.v_i_plus.empty());
  EXPECT_EQ(d.v_ii.size(), 5U);
  const auto vi = d.v_i();
  std::vector<u64> all;
  std::set_union(vi.begin(), vi.end(), d.v_ii.begin(), d.v_ii.end(), std::back_inserter(all));
  EXPECT_EQ(all.size(), 15U);
}

TEST(VSets, NaturalAndU) {
  auto n4 = cdg::v_set_decomposition(cdg::module_catalog("natural", 4), 3, 5);
  EXPECT_TRUE(n4.v_i_minus.empty());
  EXPECT_TRUE(n4.v_i_plus.empty());
  EXPECT_EQ(n4.v_ii.size(), 15U);
  auto u = cdg::v_set_decomposition(cdg::module_catalog("U"), std::nullopt, 3);
  EXPECT_EQ(u.t, 5U);
  EXPECT_TRUE(u.v_i_plus.empty());
  EXPECT_EQ(u.v_ii.size(), 24U);
}

TEST(VSets, Validation) {
  auto m = cdg::module_catalog("V1");
  EXPECT_THROW(cdg::v_set_decomposition(m, 5, 5), cdg::InvalidArgument);
  EXPECT_THROW(cdg::v_set_decomposition(m, 3, 3), cdg::InvalidArgument);
  EXPECT_THROW(cdg::v_set_decomposition(cdg::module_catalog("U"), 2, std::nullopt), cdg::InvalidArgument);
}

TEST(VSets, UnionsOfOrbits) {
  for (const auto& m : catalogue()) {
    const auto r = cdg::orbit_report(m);
    const u64 q = *m.group()->info().sl2_q;
    std::optional<u64> rr, ss;
    for (u64 p : cdg::prime_set(q - 1))
      if (p != 2) rr = p;
    for (u64 p : cdg::prime_set(q + 1))
      if (p != 2) ss = p;
    const auto d = cdg::v_set_decomposition(m, r, rr, ss);
    ASSERT_EQ(d.orbit_membership.size(), r.orbits.size());
    for (std::size_t i = 0; i < r.orbits.size(); ++i) {
      const auto& o = r.orbits[i];
      for (u64 v : {o.members.front(), o.members.back()}) {
        const auto stab = stabilizer_by_scan(m, v);
        const auto& h = *m.group();
        EXPECT_EQ(d.orbit_membership[i][0], rr && normal_full_sylow_oracle(h, stab, *rr)) << m.label();
        EXPECT_EQ(d.orbit_membership[i][1], ss && normal_full_sylow_oracle(h, stab, *ss)) << m.label();
        EXPECT_EQ(d.orbit_membership[i][2], normal_full_sylow_oracle(h, stab, d.t)) << m.label();
        EXPECT_EQ(std::binary_search(d.v_ii.begin(), d.v_ii.end(), v), d.orbit_membership[i][2]);
      }
    }
  }
}

TEST(Dichotomy, DeskScale) {
  auto v1 = cdg::type_dichotomy(cdg::module_catalog("V1"));
  EXPECT_TRUE(v1.holds);
  EXPECT_EQ(v1.witness_prime, 3U);
  EXPECT_FALSE(cdg::type_dichotomy(cdg::module_catalog("V0")).holds);
  EXPECT_FALSE(cdg::type_dichotomy(cdg::module_catalog("natural", 4)).holds);
  EXPECT_FALSE(cdg::type_dichotomy(cdg::module_catalog("natural", 8)).holds);
  EXPECT_THROW(cdg::type_dichotomy(cdg::module_catalog("W")), cdg::InvalidArgument);
}

TEST(SylowNormalizer, Counts) {
  EXPECT_EQ(cdg::sylow_normalizer_count(4, 3), 2U);
  EXPECT_EQ(cdg::sylow_normalizer_count(8, 7), 2U);
  EXPECT_EQ(cdg::sylow_normalizer_count(16, 3), 2U);
  EXPECT_EQ(cdg::sylow_normalizer_count(16, 5), 2U);
  EXPECT_THROW(cdg::sylow_normalizer_count(4, 5), cdg::InvalidArgument);
  EXPECT_THROW(cdg::sylow_normalizer_count(4, 2), cdg::InvalidArgument);
  EXPECT_THROW(cdg::sylow_normalizer_count(5, 2), cdg::InvalidArgument);
}

TEST(SylowNormalizer, EverySubgroupOfOddPrimeOrder) {
  for (u64 q : {4U, 8U, 16U}) {
    auto g = cdg::sl2_group(q);
    auto syl = cdg::sylow2_subgroups_sl2(*g);
    for (u64 u : cdg::prime_set(q - 1)) {
      auto subs = cdg::prime_order_subgroups(*g, u);
      EXPECT_FALSE(subs.empty());
      for (const auto& s : subs) {
        // Independent count by testing every Sylow 2-subgroup by hand.
        std::size_t n = 0;
        for (const auto& t : syl) {
          bool ok = true;
          for (Index y : s.elements)
            for (Index x : t.elements) ok = ok && t.contains(g->conjugate(x, y));
          n += ok;
        }
        EXPECT_EQ(n, 2U);
        EXPECT_EQ(cdg::sylow_normalizer_count(*g, syl, u, s), n);
      }
    }
  }
}

TEST(Triality, FixedSpace) {
  EXPECT_EQ(cdg::triality_fixed_space_dim(1), static_cast<std::size_t>(oracle::triality_sign_vectors(1)));
  EXPECT_EQ(cdg::triality_fixed_space_dim(2), static_cast<std::size_t>(oracle::triality_sign_vectors(2)));
  EXPECT_GE(cdg::triality_fixed_space_dim(1), 1U);
  EXPECT_THROW(cdg::triality_fixed_space_dim(0), cdg::InvalidArgument);
  EXPECT_THROW(cdg::triality_fixed_space_dim(3), cdg::InvalidArgument);
}
