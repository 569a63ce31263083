#include <gtest/gtest.h>

#include <map>
#include <numeric>
#include <set>

#include "cdgraph/gf.hpp"
#include "oracles.hpp"

using cdg::Field;
using cdg::FieldValue;
using cdg::Matrix;
using cdg::u64;

namespace {

// Schoolbook polynomial product reduced by the field's defining polynomial.
FieldValue reference_mul(const Field& f, FieldValue x, FieldValue y) {
  const u64 t = f.characteristic();
  const unsigned a = f.degree();
  auto cx = f.coefficients(x), cy = f.coefficients(y);
  std::vector<u64> prod(2 * a, 0);
  for (unsigned i = 0; i < a; ++i)
    for (unsigned j = 0; j < a; ++j) prod[i + j] = (prod[i + j] + cx[i] * cy[j]) % t;
  const auto& poly = f.defining_polynomial();
  for (unsigned d = 2 * a - 1; d >= a; --d) {
    const u64 c = prod[d];
    if (c == 0) continue;
    for (unsigned k = 0; k <= a; ++k) prod[d - a + k] = (prod[d - a + k] + (t - c) * poly[k]) % t;
  }
  std::vector<FieldValue> out(a);
  for (unsigned i = 0; i < a; ++i) out[i] = static_cast<FieldValue>(prod[i]);
  return f.from_coefficients(out);
}

Matrix random_matrix(const Field& f, std::size_t n, std::mt19937_64& rng) {
  Matrix m(n, n);
  std::uniform_int_distribution<FieldValue> d(0, static_cast<FieldValue>(f.order() - 1));
  for (auto& x : m.data) x = d(rng);
  return m;
}

}  // namespace

TEST(Field, Construction) {
  auto f16 = cdg::field_make(2, 4);
  EXPECT_EQ(f16->order(), 16U);
  EXPECT_EQ(f16->defining_polynomial(), (std::vector<FieldValue>{1, 1, 0, 0, 1}));
  auto f9 = cdg::field_make(3, 2);
  EXPECT_EQ(f9->defining_polynomial(), (std::vector<FieldValue>{1, 0, 1}));
  EXPECT_EQ(cdg::field_make(2, 12)->order(), 4096U);
  EXPECT_EQ(cdg::field_make(2, 4), f16);
  EXPECT_EQ(f16->name(), "GF(2^4)");
}

TEST(Field, RejectsBadParameters) {
  EXPECT_THROW(cdg::field_make(4, 1), cdg::InvalidArgument);
  EXPECT_THROW(cdg::field_make(2, 0), cdg::InvalidArgument);
  EXPECT_THROW(cdg::field_make(2, 17), cdg::InvalidArgument);
  EXPECT_THROW(cdg::field_make(3, 11), cdg::InvalidArgument);
}

TEST(Field, MultiplicationMatchesPolynomialArithmetic) {
  auto rng = oracle::rng(10);
  for (auto [t, a] : std::vector<std::pair<u64, unsigned>>{{2, 1}, {2, 4}, {2, 8}, {3, 2}, {5, 3}, {2, 12}, {7, 1}}) {
    auto f = cdg::field_make(t, a);
    std::uniform_int_distribution<FieldValue> d(0, static_cast<FieldValue>(f->order() - 1));
    for (int i = 0; i < 500; ++i) {
      const FieldValue x = d(rng), y = d(rng);
      ASSERT_EQ(f->mul(x, y), reference_mul(*f, x, y)) << f->name();
    }
  }
}

TEST(Field, Axioms) {
  auto rng = oracle::rng(11);
  for (auto [t, a] : std::vector<std::pair<u64, unsigned>>{{2, 4}, {3, 2}, {2, 8}, {5, 2}, {2, 5}}) {
    auto f = cdg::field_make(t, a);
    std::uniform_int_distribution<FieldValue> d(0, static_cast<FieldValue>(f->order() - 1));
    for (int i = 0; i < 500; ++i) {
      const FieldValue x = d(rng), y = d(rng), z = d(rng);
      EXPECT_EQ(f->add(x, y), f->add(y, x));
      EXPECT_EQ(f->mul(x, y), f->mul(y, x));
      EXPECT_EQ(f->mul(x, f->add(y, z)), f->add(f->mul(x, y), f->mul(x, z)));
      EXPECT_EQ(f->mul(f->mul(x, y), z), f->mul(x, f->mul(y, z)));
      EXPECT_EQ(f->add(x, f->neg(x)), 0U);
      EXPECT_EQ(f->sub(f->add(x, y), y), x);
      if (x != 0) {
        EXPECT_EQ(f->mul(x, f->inv(x)), 1U);
        EXPECT_EQ(f->div(f->mul(x, y), x), y);
      }
    }
  }
}

TEST(Field, FrobeniusIsAutomorphismOfOrderA) {
  for (auto [t, a] : std::vector<std::pair<u64, unsigned>>{{2, 4}, {3, 2}, {2, 6}, {5, 2}}) {
    auto f = cdg::field_make(t, a);
    for (FieldValue x = 0; x < f->order(); ++x) {
      EXPECT_EQ(f->frobenius(x), f->pow(x, static_cast<std::int64_t>(t)));
      EXPECT_EQ(f->frobenius(x, a), x);
      for (FieldValue y = 0; y < f->order(); y += 3) {
        EXPECT_EQ(f->frobenius(f->mul(x, y)), f->mul(f->frobenius(x), f->frobenius(y)));
        EXPECT_EQ(f->frobenius(f->add(x, y)), f->add(f->frobenius(x), f->frobenius(y)));
      }
    }
  }
}

// phi(d) elements of each order d | q - 1, counted by repeated multiplication.
TEST(Field, MultiplicativeGroupIsCyclic) {
  for (auto [t, a] : std::vector<std::pair<u64, unsigned>>{{2, 4}, {3, 2}, {2, 6}, {5, 2}, {2, 8}}) {
    auto f = cdg::field_make(t, a);
    const u64 n = f->order() - 1;
    std::map<u64, u64> count;
    for (FieldValue x = 1; x <= n; ++x) {
      FieldValue y = x;
      u64 k = 1;
      while (y != 1) {
        y = reference_mul(*f, y, x);
        ++k;
      }
      EXPECT_EQ(f->element_order(x), k);
      ++count[k];
    }
    for (u64 d = 1; d <= n; ++d) {
      if (n % d != 0) continue;
      u64 phi = 0;
      for (u64 k = 1; k <= d; ++k) phi += std::gcd(k, d) == 1;
      EXPECT_EQ(count[d], phi) << f->name() << " d=" << d;
    }
    EXPECT_EQ(f->element_order(f->generator()), n);
  }
}

TEST(Field, LogExpAndPowers) {
  auto f = cdg::field_make(2, 8);
  for (FieldValue x = 1; x < f->order(); ++x) {
    EXPECT_EQ(f->exp(f->log(x)), x);
    EXPECT_EQ(f->pow(x, -1), f->inv(x));
    EXPECT_EQ(f->pow(x, 255), 1U);
  }
  EXPECT_EQ(f->pow(0, 0), 1U);
  EXPECT_THROW(f->inv(0), cdg::InvalidArgument);
}

TEST(Field, GF16HasOrderThreeElement) {
  auto f = cdg::field_make(2, 4);
  int n = 0;
  for (FieldValue x = 1; x < 16; ++x) n += f->element_order(x) == 3;
  EXPECT_EQ(n, 2);
}

TEST(FieldElement, Operators) {
  auto f = cdg::field_make(2, 4);
  cdg::FieldElement x(f, 6), y(f, 11);
  EXPECT_EQ((x * y).value(), f->mul(6, 11));
  EXPECT_EQ((x + y).value(), f->add(6, 11));
  EXPECT_EQ((x / y * y), x);
  EXPECT_EQ(x.inverse() * x, cdg::FieldElement(f, 1));
  EXPECT_EQ(x.frobenius(4), x);
  cdg::FieldElement z(cdg::field_make(3, 2), 1);
  EXPECT_THROW((void)(x + z), cdg::InvalidArgument);
  EXPECT_THROW(cdg::FieldElement(f, 16), cdg::InvalidArgument);
}

TEST(Linalg, InverseAndDeterminant) {
  auto rng = oracle::rng(12);
  for (auto [t, a] : std::vector<std::pair<u64, unsigned>>{{2, 1}, {2, 4}, {3, 2}, {5, 1}}) {
    auto f = cdg::field_make(t, a);
    for (int i = 0; i < 60; ++i) {
      Matrix m = random_matrix(*f, 4, rng), n = random_matrix(*f, 4, rng);
      EXPECT_EQ(cdg::linalg::determinant(*f, cdg::linalg::multiply(*f, m, n)),
                f->mul(cdg::linalg::determinant(*f, m), cdg::linalg::determinant(*f, n)));
      const bool invertible = cdg::linalg::determinant(*f, m) != 0;
      EXPECT_EQ(invertible, cdg::linalg::rank(*f, m) == 4);
      if (invertible) {
        EXPECT_EQ(cdg::linalg::multiply(*f, m, cdg::linalg::inverse(*f, m)), Matrix::identity(4));
      } else {
        EXPECT_THROW(cdg::linalg::inverse(*f, m), cdg::InvalidArgument);
        EXPECT_GE(cdg::linalg::nullity(*f, m), 1U);
      }
    }
  }
}

TEST(Linalg, KroneckerMixedProduct) {
  auto rng = oracle::rng(13);
  auto f = cdg::field_make(2, 4);
  for (int i = 0; i < 30; ++i) {
    Matrix a = random_matrix(*f, 2, rng), b = random_matrix(*f, 2, rng), c = random_matrix(*f, 2, rng),
           d = random_matrix(*f, 2, rng);
    using namespace cdg::linalg;
    EXPECT_EQ(multiply(*f, kronecker(*f, a, b), kronecker(*f, c, d)),
              kronecker(*f, multiply(*f, a, c), multiply(*f, b, d)));
  }
}

// Writing GF(t^a) as a-dimensional over GF(t) is a ring homomorphism.
TEST(Linalg, RestrictScalarsIsMultiplicative) {
  auto rng = oracle::rng(14);
  for (auto [t, a] : std::vector<std::pair<u64, unsigned>>{{2, 4}, {3, 2}, {2, 3}}) {
    auto big = cdg::field_make(t, a);
    auto small = cdg::field_make(t, 1);
    for (int i = 0; i < 40; ++i) {
      Matrix m = random_matrix(*big, 2, rng), n = random_matrix(*big, 2, rng);
      using namespace cdg::linalg;
      EXPECT_EQ(restrict_scalars(*big, multiply(*big, m, n)),
                multiply(*small, restrict_scalars(*big, m), restrict_scalars(*big, n)));
    }
    for (FieldValue x = 0; x < big->order(); ++x)
      for (FieldValue y = 0; y < big->order(); y += 2) {
        using namespace cdg::linalg;
        EXPECT_EQ(scalar_as_prime_matrix(*big, big->mul(x, y)),
                  multiply(*small, scalar_as_prime_matrix(*big, x), scalar_as_prime_matrix(*big, y)));
      }
  }
}
