#include <gtest/gtest.h>

#include <set>

#include "cdgraph/group.hpp"
#include "oracles.hpp"

using cdg::Index;
using cdg::u64;

namespace {

std::size_t center_order(const cdg::FiniteGroup& g) {
  std::size_t n = 0;
  for (Index x = 0; x < g.order(); ++x) n += oracle::commuting_count(g, x) == g.order();
  return n;
}

std::size_t count_order(const cdg::FiniteGroup& g, u64 k) {
  std::size_t n = 0;
  for (Index x = 0; x < g.order(); ++x) {
    Index y = x;
    u64 m = 1;
    while (y != 0) {
      y = g.multiply(y, x);
      ++m;
    }
    n += m == k;
  }
  return n;
}

void expect_group_axioms(const cdg::FiniteGroup& g, std::uint64_t salt) {
  auto rng = oracle::rng(salt);
  std::uniform_int_distribution<Index> d(0, static_cast<Index>(g.order() - 1));
  for (int i = 0; i < 400; ++i) {
    const Index x = d(rng), y = d(rng), z = d(rng);
    ASSERT_LT(g.multiply(x, y), g.order());
    EXPECT_EQ(g.multiply(g.multiply(x, y), z), g.multiply(x, g.multiply(y, z)));
    EXPECT_EQ(g.multiply(x, g.inverse(x)), 0U);
    EXPECT_EQ(g.multiply(0, x), x);
    EXPECT_EQ(g.multiply(x, 0), x);
    EXPECT_EQ(g.find(g.code(x)), x);
  }
}

}  // namespace

TEST(SL2, Orders) {
  EXPECT_EQ(cdg::sl2_group(4)->order(), 60U);
  EXPECT_EQ(cdg::sl2_group(8)->order(), 504U);
  EXPECT_EQ(cdg::sl2_group(16)->order(), 4080U);
  EXPECT_EQ(cdg::sl2_group(32)->order(), 32736U);
  EXPECT_EQ(cdg::sl2_group(5)->order(), 120U);
  EXPECT_EQ(cdg::sl2_group(9)->order(), 720U);
  EXPECT_EQ(cdg::sl2_group(2)->order(), 6U);
}

TEST(SL2, Centers) {
  EXPECT_EQ(center_order(*cdg::sl2_group(4)), 1U);
  EXPECT_EQ(center_order(*cdg::sl2_group(8)), 1U);
  EXPECT_EQ(center_order(*cdg::sl2_group(5)), 2U);
}

TEST(SL2, Info) {
  auto g = cdg::sl2_group(16);
  EXPECT_EQ(g->name(), "SL2(16)");
  EXPECT_EQ(g->info().sl2_q, 16U);
  EXPECT_EQ(g->info().radical_quotient_primes, (cdg::PrimeSet{2, 3, 5, 17}));
  EXPECT_TRUE(cdg::sl2_group(2)->info().radical_quotient_primes.empty());
  EXPECT_EQ(g->identity(), 0U);
  EXPECT_EQ(g->matrix(0), cdg::Matrix::identity(2));
}

TEST(SL2, Rejects) {
  EXPECT_THROW(cdg::sl2_group(6), cdg::InvalidArgument);
  EXPECT_THROW(cdg::sl2_group(1), cdg::InvalidArgument);
  EXPECT_THROW(cdg::sl2_group(0), cdg::InvalidArgument);
  EXPECT_THROW(cdg::sl2_group(8, 100), cdg::CeilingExceeded);
  EXPECT_THROW(cdg::sl2_group(128), cdg::CeilingExceeded);
}

TEST(SL2, MatricesHaveDeterminantOneAndAreDistinct) {
  auto g = cdg::sl2_group(8);
  const auto& f = *g->field();
  std::set<std::vector<cdg::FieldValue>> seen;
  for (Index x = 0; x < g->order(); ++x) {
    auto m = g->matrix(x);
    EXPECT_EQ(cdg::linalg::determinant(f, m), 1U);
    seen.insert(m.data);
  }
  EXPECT_EQ(seen.size(), g->order());
  for (int i = 0; i < 200; ++i) {
    const Index x = static_cast<Index>((i * 37) % 504), y = static_cast<Index>((i * 101 + 7) % 504);
    EXPECT_EQ(g->matrix(g->multiply(x, y)), cdg::linalg::multiply(f, g->matrix(x), g->matrix(y)));
  }
}

TEST(Group, Axioms) {
  expect_group_axioms(*cdg::sl2_group(16), 20);
  expect_group_axioms(*cdg::cyclic_group(7), 21);
  expect_group_axioms(*cdg::extraspecial_group(5, cdg::ExtraspecialType::heisenberg), 22);
  expect_group_axioms(*cdg::direct_product(cdg::sl2_group(4), cdg::extraspecial_group(2, cdg::ExtraspecialType::quaternion)),
                      23);
}

TEST(Group, EncodingIsInjectiveAndTagged) {
  auto g = cdg::direct_product(cdg::sl2_group(4), cdg::cyclic_group(5));
  std::set<std::vector<std::uint8_t>> seen;
  for (Index x = 0; x < g->order(); ++x) {
    auto e = g->encode(x);
    ASSERT_EQ(e.size(), 9U);
    EXPECT_EQ(e[0], static_cast<std::uint8_t>(cdg::Representation::product));
    seen.insert(e);
  }
  EXPECT_EQ(seen.size(), g->order());
  EXPECT_EQ(cdg::sl2_group(4)->encode(3)[0], static_cast<std::uint8_t>(cdg::Representation::matrix));
}

TEST(Group, ElementOrdersAndPowers) {
  auto g = cdg::sl2_group(4);
  EXPECT_EQ(count_order(*g, 2), 15U);
  EXPECT_EQ(count_order(*g, 3), 20U);
  EXPECT_EQ(count_order(*g, 5), 24U);
  for (Index x = 0; x < g->order(); ++x) {
    EXPECT_EQ(g->power(x, g->element_order(x)), 0U);
    EXPECT_EQ(g->power(x, 0), 0U);
    EXPECT_EQ(g->power(x, 61), x);
  }
}

TEST(Cyclic, Structure) {
  auto g = cdg::cyclic_group(12);
  EXPECT_EQ(g->order(), 12U);
  EXPECT_EQ(count_order(*g, 12), 4U);
  EXPECT_EQ(cdg::cyclic_group(1)->order(), 1U);
  EXPECT_THROW(cdg::cyclic_group(0), cdg::InvalidArgument);
}

TEST(Extraspecial, Structure) {
  auto q8 = cdg::extraspecial_group(2, cdg::ExtraspecialType::quaternion);
  auto d8 = cdg::extraspecial_group(2, cdg::ExtraspecialType::dihedral);
  auto e27 = cdg::extraspecial_group(3, cdg::ExtraspecialType::heisenberg);
  auto e125 = cdg::extraspecial_group(5, cdg::ExtraspecialType::heisenberg);
  EXPECT_EQ(q8->order(), 8U);
  EXPECT_EQ(d8->order(), 8U);
  EXPECT_EQ(e27->order(), 27U);
  EXPECT_EQ(e125->order(), 125U);
  EXPECT_EQ(count_order(*q8, 2), 1U);
  EXPECT_EQ(count_order(*d8, 2), 5U);
  EXPECT_EQ(count_order(*e125, 5), 124U);
  for (const auto& g : {q8, d8, e27, e125}) {
    const u64 t = g->order() == 8 ? 2 : (g->order() == 27 ? 3 : 5);
    EXPECT_EQ(center_order(*g), t) << g->name();
  }
  EXPECT_THROW(cdg::extraspecial_group(4, cdg::ExtraspecialType::heisenberg), cdg::InvalidArgument);
  EXPECT_THROW(cdg::extraspecial_group(2, cdg::ExtraspecialType::heisenberg), cdg::InvalidArgument);
  EXPECT_THROW(cdg::extraspecial_group(3, cdg::ExtraspecialType::quaternion), cdg::InvalidArgument);
}

TEST(DirectProduct, ComponentsMultiplyIndependently) {
  auto a = cdg::sl2_group(4);
  auto b = cdg::extraspecial_group(3, cdg::ExtraspecialType::heisenberg);
  auto g = cdg::direct_product(a, b);
  EXPECT_EQ(g->order(), 60U * 27U);
  EXPECT_EQ(g->name(), "SL2(4) x 3^(1+2)");
  EXPECT_EQ(g->info().radical_quotient_primes, (cdg::PrimeSet{2, 3, 5}));
  const Index n2 = 27;
  for (Index x = 0; x < g->order(); x += 7)
    for (Index y = 0; y < g->order(); y += 11) {
      EXPECT_EQ(g->multiply(x, y), a->multiply(x / n2, y / n2) * n2 + b->multiply(x % n2, y % n2));
    }
  EXPECT_THROW(cdg::direct_product(cdg::sl2_group(32), cdg::sl2_group(32)), cdg::CeilingExceeded);
}

TEST(Subgroups, GeneratorsGenerate) {
  for (u64 q : {4U, 8U, 16U}) {
    auto g = cdg::sl2_group(q);
    EXPECT_EQ(cdg::generated_subgroup(*g, g->generators()).order(), g->order());
  }
  auto g = cdg::sl2_group(4);
  EXPECT_EQ(cdg::generated_subgroup(*g, {}).order(), 1U);
}

TEST(Subgroups, Sylow2OfSL2) {
  for (u64 q : {4U, 8U, 16U}) {
    auto g = cdg::sl2_group(q);
    auto syl = cdg::sylow2_subgroups_sl2(*g);
    ASSERT_EQ(syl.size(), q + 1);
    std::set<std::vector<Index>> distinct;
    for (const auto& s : syl) {
      EXPECT_EQ(s.order(), q);
      distinct.insert(s.elements);
      for (Index x : s.elements) EXPECT_LE(g->element_order(x), 2U);
    }
    EXPECT_EQ(distinct.size(), q + 1);
    // Trivial intersection: q + 1 subgroups account for all q^2 - 1 involutions.
    std::set<Index> involutions;
    for (const auto& s : syl)
      for (Index x : s.elements)
        if (x != 0) involutions.insert(x);
    EXPECT_EQ(involutions.size(), q * q - 1);
  }
  EXPECT_THROW(cdg::sylow2_subgroups_sl2(5), cdg::InvalidArgument);
}

TEST(Subgroups, ConjugationAndNormalizing) {
  auto g = cdg::sl2_group(4);
  auto syl = cdg::sylow2_subgroups_sl2(*g);
  const auto& t = syl.front();
  EXPECT_TRUE(cdg::normalizes(*g, t, t));
  for (Index x = 0; x < g->order(); ++x) {
    auto c = cdg::conjugate_subgroup(*g, t, x);
    bool found = false;
    for (const auto& s : syl) found = found || cdg::same_subgroup(*g, s, c);
    EXPECT_TRUE(found);
  }
  EXPECT_FALSE(cdg::normalizes(*g, syl[1], syl[0]));
}
