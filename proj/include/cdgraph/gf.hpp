#pragma once

// Small finite fields GF(t^a) with log/exp tables, and dense matrices over
// them. Elements are encoded as integers sum(c_i * t^i) where c_i are the
// coefficients of the residue polynomial; the prime subfield is {0..t-1}.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cdgraph/error.hpp"
#include "cdgraph/numtheory.hpp"

namespace cdg {

class Field {
 public:
  using Value = std::uint32_t;
  static constexpr u64 kMaxOrder = 1U << 16U;

  // GF(t^a) with the lexicographically least irreducible defining
  // polynomial. Instances are cached; equal parameters share one object.
  static std::shared_ptr<const Field> make(u64 t, unsigned a) {
    static std::mutex mutex;
    static std::map<std::pair<u64, unsigned>, std::shared_ptr<const Field>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[{t, a}];
    if (!slot) slot = std::shared_ptr<const Field>(new Field(t, a));
    return slot;
  }

  u64 characteristic() const noexcept { return t_; }
  unsigned degree() const noexcept { return a_; }
  u64 order() const noexcept { return q_; }
  // Monic defining polynomial, lowest coefficient first (length a + 1).
  const std::vector<Value>& defining_polynomial() const noexcept { return poly_; }
  Value generator() const noexcept { return generator_; }

  Value add(Value x, Value y) const {
    if (t_ == 2) return x ^ y;
    if (!add_table_.empty()) return add_table_[x * q_ + y];
    return digitwise(x, y, false);
  }
  Value sub(Value x, Value y) const {
    if (t_ == 2) return x ^ y;
    return digitwise(x, y, true);
  }
  Value neg(Value x) const { return sub(0, x); }

  Value mul(Value x, Value y) const {
    if (x == 0 || y == 0) return 0;
    return exp_[log_[x] + log_[y]];
  }
  Value inv(Value x) const {
    if (x == 0) throw InvalidArgument("Field::inv: zero has no inverse");
    return exp_[(q_ - 1 - log_[x]) % (q_ - 1)];
  }
  Value div(Value x, Value y) const { return mul(x, inv(y)); }

  Value pow(Value x, std::int64_t e) const {
    if (x == 0) {
      if (e < 0) throw InvalidArgument("Field::pow: negative power of zero");
      return e == 0 ? 1 : 0;
    }
    const auto n = static_cast<std::int64_t>(q_ - 1);
    std::int64_t k = (static_cast<std::int64_t>(log_[x]) * (e % n)) % n;
    if (k < 0) k += n;
    return exp_[static_cast<std::size_t>(k)];
  }

  // x -> x^(t^k), the k-th power of the Frobenius automorphism.
  Value frobenius(Value x, unsigned k = 1) const {
    if (x == 0) return 0;
    u64 e = 1;
    for (unsigned i = 0; i < k % a_; ++i) e *= t_;
    return pow(x, static_cast<std::int64_t>(e));
  }

  u64 element_order(Value x) const {
    if (x == 0) throw InvalidArgument("element_order: zero has no multiplicative order");
    return (q_ - 1) / std::gcd<u64>(log_[x], q_ - 1);
  }

  // Discrete log to the stored generator.
  u64 log(Value x) const {
    if (x == 0) throw InvalidArgument("Field::log: zero has no logarithm");
    return log_[x];
  }
  Value exp(u64 k) const { return exp_[k % (q_ - 1)]; }

  std::vector<Value> coefficients(Value x) const {
    std::vector<Value> c(a_);
    for (unsigned i = 0; i < a_; ++i) {
      c[i] = static_cast<Value>(x % t_);
      x = static_cast<Value>(x / t_);
    }
    return c;
  }

  Value from_coefficients(std::span<const Value> c) const {
    if (c.size() != a_) throw InvalidArgument("from_coefficients: wrong length");
    Value x = 0;
    for (std::size_t i = c.size(); i-- > 0;) {
      if (c[i] >= t_) throw InvalidArgument("from_coefficients: coefficient not reduced");
      x = static_cast<Value>(x * t_ + c[i]);
    }
    return x;
  }

  // Image of an integer in the prime subfield.
  Value from_int(std::int64_t n) const {
    auto t = static_cast<std::int64_t>(t_);
    return static_cast<Value>(((n % t) + t) % t);
  }

  bool contains(Value x) const noexcept { return x < q_; }

  std::string name() const {
    return a_ == 1 ? "GF(" + std::to_string(t_) + ")"
                   : "GF(" + std::to_string(t_) + "^" + std::to_string(a_) + ")";
  }

 private:
  Field(u64 t, unsigned a) : t_(t), a_(a) {
    if (!nt::is_prime(t)) throw InvalidArgument("field_make: characteristic must be prime");
    if (a < 1 || a > 16) throw InvalidArgument("field_make: degree must lie in [1, 16]");
    u128 q = 1;
    for (unsigned i = 0; i < a; ++i) q *= t;
    if (q > kMaxOrder) throw InvalidArgument("field_make: field order exceeds 2^16");
    q_ = static_cast<u64>(q);
    poly_ = least_irreducible();
    if (t_ != 2 && q_ <= 256) {
      add_table_.resize(q_ * q_);
      for (Value x = 0; x < q_; ++x)
        for (Value y = 0; y < q_; ++y) add_table_[x * q_ + y] = digitwise(x, y, false);
    }
    build_tables();
  }

  Value digitwise(Value x, Value y, bool subtract) const {
    Value out = 0, scale = 1;
    for (unsigned i = 0; i < a_; ++i) {
      const Value dx = static_cast<Value>(x % t_), dy = static_cast<Value>(y % t_);
      const Value d = subtract ? static_cast<Value>((dx + t_ - dy) % t_) : static_cast<Value>((dx + dy) % t_);
      out += d * scale;
      scale = static_cast<Value>(scale * t_);
      x = static_cast<Value>(x / t_);
      y = static_cast<Value>(y / t_);
    }
    return out;
  }

  // Polynomial helpers over GF(t) on coefficient vectors (lowest first).
  using Poly = std::vector<Value>;

  static void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
  }

  Poly poly_mod(Poly num, const Poly& den) const {
    trim(num);
    const Value lead_inv = static_cast<Value>(nt::pow_mod(den.back(), t_ - 2, t_));
    while (num.size() >= den.size()) {
      const Value c = static_cast<Value>(static_cast<u64>(num.back()) * lead_inv % t_);
      const std::size_t shift = num.size() - den.size();
      for (std::size_t j = 0; j < den.size(); ++j) {
        num[shift + j] = static_cast<Value>((num[shift + j] + t_ * t_ - static_cast<u64>(c) * den[j] % t_) % t_);
      }
      trim(num);
    }
    return num;
  }

  Poly monic_from_code(u64 code, unsigned deg) const {
    Poly p(deg + 1, 0);
    for (unsigned i = 0; i < deg; ++i) {
      p[i] = static_cast<Value>(code % t_);
      code /= t_;
    }
    p[deg] = 1;
    return p;
  }

  bool irreducible(const Poly& f) const {
    const unsigned deg = static_cast<unsigned>(f.size() - 1);
    for (unsigned d = 1; 2 * d <= deg; ++d) {
      const u64 count = nt::ipow(t_, d);
      for (u64 code = 0; code < count; ++code) {
        if (poly_mod(f, monic_from_code(code, d)).empty()) return false;
      }
    }
    return true;
  }

  Poly least_irreducible() const {
    const u64 count = nt::ipow(t_, a_);
    for (u64 code = 0; code < count; ++code) {
      Poly f = monic_from_code(code, a_);
      if (irreducible(f)) return f;
    }
    throw InternalError("no irreducible polynomial found");
  }

  Value slow_mul(Value x, Value y) const {
    auto cx = coefficients(x), cy = coefficients(y);
    Poly prod(2 * a_, 0);
    for (unsigned i = 0; i < a_; ++i)
      for (unsigned j = 0; j < a_; ++j)
        prod[i + j] = static_cast<Value>((prod[i + j] + static_cast<u64>(cx[i]) * cy[j]) % t_);
    Poly r = poly_mod(prod, poly_);
    r.resize(a_, 0);
    return from_coefficients(r);
  }

  void build_tables() {
    const auto factors = nt::factorize(q_ - 1 == 0 ? 1 : q_ - 1);
    auto slow_pow = [&](Value x, u64 e) {
      Value r = 1;
      while (e != 0) {
        if (e & 1U) r = slow_mul(r, x);
        x = slow_mul(x, x);
        e >>= 1U;
      }
      return r;
    };
    generator_ = 0;
    for (Value g = 1; g < q_ && generator_ == 0; ++g) {
      bool primitive = true;
      for (auto [r, e] : factors) {
        if (q_ - 1 > 1 && slow_pow(g, (q_ - 1) / r) == 1) primitive = false;
      }
      if (primitive) generator_ = g;
    }
    if (generator_ == 0) throw InternalError("no multiplicative generator found");
    exp_.assign(2 * (q_ - 1), 0);
    log_.assign(q_, 0);
    Value x = 1;
    for (u64 i = 0; i < q_ - 1; ++i) {
      exp_[i] = x;
      exp_[i + q_ - 1] = x;
      log_[x] = static_cast<Value>(i);
      x = slow_mul(x, generator_);
    }
    if (x != 1) throw InternalError("generator does not have full order");
  }

  u64 t_;
  unsigned a_;
  u64 q_ = 0;
  Poly poly_;
  Value generator_ = 0;
  std::vector<Value> exp_;
  std::vector<Value> log_;
  std::vector<Value> add_table_;
};

using FieldPtr = std::shared_ptr<const Field>;
using FieldValue = Field::Value;

inline FieldPtr field_make(u64 t, unsigned a) { return Field::make(t, a); }

// Value-type element bound to its field.
class FieldElement {
 public:
  FieldElement(FieldPtr field, FieldValue value) : field_(std::move(field)), value_(value) {
    if (!field_ || !field_->contains(value_)) throw InvalidArgument("FieldElement: value out of range");
  }

  const FieldPtr& field() const noexcept { return field_; }
  FieldValue value() const noexcept { return value_; }
  std::vector<FieldValue> coefficients() const { return field_->coefficients(value_); }
  bool is_zero() const noexcept { return value_ == 0; }

  u64 order() const { return field_->element_order(value_); }
  FieldElement inverse() const { return {field_, field_->inv(value_)}; }
  FieldElement pow(std::int64_t e) const { return {field_, field_->pow(value_, e)}; }
  FieldElement frobenius(unsigned k = 1) const { return {field_, field_->frobenius(value_, k)}; }

  friend FieldElement operator+(const FieldElement& x, const FieldElement& y) {
    check_same(x, y);
    return {x.field_, x.field_->add(x.value_, y.value_)};
  }
  friend FieldElement operator-(const FieldElement& x, const FieldElement& y) {
    check_same(x, y);
    return {x.field_, x.field_->sub(x.value_, y.value_)};
  }
  friend FieldElement operator*(const FieldElement& x, const FieldElement& y) {
    check_same(x, y);
    return {x.field_, x.field_->mul(x.value_, y.value_)};
  }
  friend FieldElement operator/(const FieldElement& x, const FieldElement& y) {
    check_same(x, y);
    return {x.field_, x.field_->div(x.value_, y.value_)};
  }
  friend bool operator==(const FieldElement& x, const FieldElement& y) {
    return x.field_ == y.field_ && x.value_ == y.value_;
  }

 private:
  static void check_same(const FieldElement& x, const FieldElement& y) {
    if (x.field_ != y.field_) throw InvalidArgument("FieldElement: operands belong to different fields");
  }

  FieldPtr field_;
  FieldValue value_;
};

inline u64 element_order(const FieldElement& x) { return x.order(); }

// Dense row-major matrix of field values. The field travels separately.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<FieldValue> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  FieldValue& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  FieldValue operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

  friend bool operator==(const Matrix&, const Matrix&) = default;
};

namespace linalg {

inline Matrix multiply(const Field& f, const Matrix& a, const Matrix& b) {
  if (a.cols != b.rows) throw InvalidArgument("matrix multiply: shape mismatch");
  Matrix c(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      const FieldValue x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols; ++j) c(i, j) = f.add(c(i, j), f.mul(x, b(k, j)));
    }
  return c;
}

inline Matrix kronecker(const Field& f, const Matrix& a, const Matrix& b) {
  Matrix c(a.rows * b.rows, a.cols * b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j)
      for (std::size_t k = 0; k < b.rows; ++k)
        for (std::size_t l = 0; l < b.cols; ++l) c(i * b.rows + k, j * b.cols + l) = f.mul(a(i, j), b(k, l));
  return c;
}

// Row-reduces in place and returns the rank.
inline std::size_t row_reduce(const Field& f, Matrix& m) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows) continue;
    for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(pivot, j), m(rank, j));
    const FieldValue s = f.inv(m(rank, col));
    for (std::size_t j = 0; j < m.cols; ++j) m(rank, j) = f.mul(m(rank, j), s);
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == rank || m(i, col) == 0) continue;
      const FieldValue c = m(i, col);
      for (std::size_t j = 0; j < m.cols; ++j) m(i, j) = f.sub(m(i, j), f.mul(c, m(rank, j)));
    }
    ++rank;
  }
  return rank;
}

inline std::size_t rank(const Field& f, Matrix m) { return row_reduce(f, m); }

inline std::size_t nullity(const Field& f, const Matrix& m) { return m.cols - rank(f, m); }

inline Matrix inverse(const Field& f, const Matrix& m) {
  if (m.rows != m.cols) throw InvalidArgument("matrix inverse: not square");
  const std::size_t n = m.rows;
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  if (row_reduce(f, aug) < n || aug(n - 1, n - 1) != 1) throw InvalidArgument("matrix inverse: singular");
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

inline FieldValue determinant(const Field& f, Matrix m) {
  if (m.rows != m.cols) throw InvalidArgument("determinant: not square");
  FieldValue det = 1;
  for (std::size_t col = 0; col < m.cols; ++col) {
    std::size_t pivot = col;
    while (pivot < m.rows && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows) return 0;
    if (pivot != col) {
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(pivot, j), m(col, j));
      det = f.neg(det);
    }
    det = f.mul(det, m(col, col));
    const FieldValue s = f.inv(m(col, col));
    for (std::size_t i = col + 1; i < m.rows; ++i) {
      const FieldValue c = f.mul(m(i, col), s);
      if (c == 0) continue;
      for (std::size_t j = col; j < m.cols; ++j) m(i, j) = f.sub(m(i, j), f.mul(c, m(col, j)));
    }
  }
  return det;
}

// Multiplication-by-x on GF(t^a) as an a x a matrix over GF(t), acting on
// coefficient columns in the polynomial basis 1, X, ..., X^(a-1).
inline Matrix scalar_as_prime_matrix(const Field& big, FieldValue x) {
  const unsigned a = big.degree();
  Matrix m(a, a);
  u64 basis = 1;  // X^j is encoded as t^j
  for (unsigned j = 0; j < a; ++j, basis *= big.characteristic()) {
    auto col = big.coefficients(big.mul(x, static_cast<FieldValue>(basis)));
    for (unsigned i = 0; i < a; ++i) m(i, j) = col[i];
  }
  return m;
}

// Restriction of scalars: an n x n matrix over GF(t^a) becomes an
// na x na matrix over GF(t), block (i, j) being multiplication by m(i, j).
inline Matrix restrict_scalars(const Field& big, const Matrix& m) {
  const unsigned a = big.degree();
  Matrix out(m.rows * a, m.cols * a);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) {
      Matrix block = scalar_as_prime_matrix(big, m(i, j));
      for (unsigned r = 0; r < a; ++r)
        for (unsigned c = 0; c < a; ++c) out(i * a + r, j * a + c) = block(r, c);
    }
  return out;
}

}  // namespace linalg
}  // namespace cdg
