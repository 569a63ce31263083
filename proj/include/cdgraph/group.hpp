#pragma once

// Fully enumerated finite groups. Every element has a dense index in
// [0, order) with the identity at index 0, and a canonical 64-bit code that
// serializes its matrix, affine pair or tuple representation. Codes are
// injective, deterministic and totally ordered; the ordering of classes and
// subgroups throughout the library is derived from them.

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cdgraph/error.hpp"
#include "cdgraph/gf.hpp"
#include "cdgraph/numtheory.hpp"

namespace cdg {

using Index = std::uint32_t;
using Code = std::uint64_t;

enum class Representation : std::uint8_t { matrix = 1, affine = 2, product = 3 };

// Structural data a group carries by construction. Nothing here is
// recomputed from the multiplication.
struct GroupInfo {
  std::string name;
  // Set when the group is SL2(q) in its natural 2 x 2 matrix form.
  std::optional<u64> sl2_q;
  // pi(G/R) for the solvable radical R; empty for solvable groups.
  PrimeSet radical_quotient_primes;
  // For V x| H: |V|. Elements with index < |V| form the normal subgroup V.
  std::optional<u64> module_order;
};

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

namespace detail {

class GroupArithmetic {
 public:
  virtual ~GroupArithmetic() = default;
  virtual std::size_t order() const = 0;
  virtual Index multiply(Index a, Index b) const = 0;
  virtual Index inverse(Index a) const = 0;
  virtual Code code(Index a) const = 0;
  virtual std::optional<Index> find(Code c) const = 0;
  // Exclusive upper bound on codes.
  virtual Code code_bound() const = 0;
};

// Lookup from code to index: a dense table when the code range is small.
class CodeIndex {
 public:
  static constexpr Index kAbsent = UINT32_MAX;

  void build(const std::vector<Code>& codes, Code bound) {
    if (bound <= (Code{1} << 24U)) {
      dense_.assign(static_cast<std::size_t>(bound), kAbsent);
      for (std::size_t i = 0; i < codes.size(); ++i) dense_[codes[i]] = static_cast<Index>(i);
    } else {
      sparse_.reserve(codes.size());
      for (std::size_t i = 0; i < codes.size(); ++i) sparse_.emplace(codes[i], static_cast<Index>(i));
    }
  }

  std::optional<Index> find(Code c) const {
    if (!dense_.empty()) {
      if (c >= dense_.size() || dense_[c] == kAbsent) return std::nullopt;
      return dense_[c];
    }
    auto it = sparse_.find(c);
    if (it == sparse_.end()) return std::nullopt;
    return it->second;
  }

 private:
  std::vector<Index> dense_;
  std::unordered_map<Code, Index> sparse_;
};

class MatrixArithmetic final : public GroupArithmetic {
 public:
  MatrixArithmetic(FieldPtr field, std::size_t dim) : field_(std::move(field)), dim_(dim) {
    bound_ = 1;
    for (std::size_t i = 0; i < dim * dim; ++i) {
      bound_ = nt::checked_mul(bound_, field_->order());
    }
    if (bound_ > (Code{1} << 62U)) throw InvalidArgument("matrix group: encoding exceeds 62 bits");
  }

  Code encode(const FieldValue* entries) const {
    Code c = 0;
    for (std::size_t k = 0; k < dim_ * dim_; ++k) c = c * field_->order() + entries[k];
    return c;
  }

  // Breadth-first closure of the generators under right multiplication.
  void enumerate(const std::vector<Matrix>& gens, std::size_t ceiling) {
    const std::size_t sq = dim_ * dim_;
    std::unordered_map<Code, Index> seen;
    auto push = [&](const FieldValue* m) {
      Code c = encode(m);
      if (seen.count(c)) return false;
      if (codes_.size() + 1 > ceiling) throw CeilingExceeded(codes_.size() + 1, ceiling);
      seen.emplace(c, static_cast<Index>(codes_.size()));
      codes_.push_back(c);
      entries_.insert(entries_.end(), m, m + sq);
      return true;
    };
    Matrix id = Matrix::identity(dim_);
    push(id.data.data());
    std::vector<FieldValue> prod(sq);
    for (std::size_t head = 0; head < codes_.size(); ++head) {
      for (const Matrix& g : gens) {
        mul_raw(&entries_[head * sq], g.data.data(), prod.data());
        push(prod.data());
      }
    }
    lookup_.build(codes_, bound_);
    inverse_.resize(codes_.size());
    for (std::size_t i = 0; i < codes_.size(); ++i) {
      Matrix inv = linalg::inverse(*field_, matrix(static_cast<Index>(i)));
      auto j = lookup_.find(encode(inv.data.data()));
      if (!j) throw InternalError("matrix group not closed under inverses");
      inverse_[i] = *j;
    }
  }

  std::size_t order() const override { return codes_.size(); }

  Index multiply(Index a, Index b) const override {
    std::array<FieldValue, 16> buf{};
    std::vector<FieldValue> big;
    FieldValue* out = buf.data();
    if (dim_ * dim_ > buf.size()) {
      big.resize(dim_ * dim_);
      out = big.data();
    }
    mul_raw(&entries_[a * dim_ * dim_], &entries_[b * dim_ * dim_], out);
    auto idx = lookup_.find(encode(out));
    if (!idx) throw InternalError("product left the enumerated group");
    return *idx;
  }

  Index inverse(Index a) const override { return inverse_[a]; }
  Code code(Index a) const override { return codes_[a]; }
  std::optional<Index> find(Code c) const override { return lookup_.find(c); }
  Code code_bound() const override { return bound_; }

  Matrix matrix(Index a) const {
    Matrix m(dim_, dim_);
    std::copy_n(&entries_[a * dim_ * dim_], dim_ * dim_, m.data.begin());
    return m;
  }
  std::optional<Index> find_matrix(const Matrix& m) const {
    if (m.rows != dim_ || m.cols != dim_) return std::nullopt;
    return lookup_.find(encode(m.data.data()));
  }

  const FieldPtr& field() const { return field_; }
  std::size_t dim() const { return dim_; }

 private:
  void mul_raw(const FieldValue* x, const FieldValue* y, FieldValue* out) const {
    const Field& f = *field_;
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) {
        FieldValue acc = 0;
        for (std::size_t k = 0; k < dim_; ++k) acc = f.add(acc, f.mul(x[i * dim_ + k], y[k * dim_ + j]));
        out[i * dim_ + j] = acc;
      }
  }

  FieldPtr field_;
  std::size_t dim_;
  Code bound_ = 0;
  std::vector<Code> codes_;
  std::vector<FieldValue> entries_;
  std::vector<Index> inverse_;
  CodeIndex lookup_;
};

}  // namespace detail

class FiniteGroup {
 public:
  FiniteGroup(Representation rep, std::shared_ptr<const detail::GroupArithmetic> arith,
              std::vector<Index> generators, GroupInfo info)
      : rep_(rep), arith_(std::move(arith)), generators_(std::move(generators)), info_(std::move(info)) {}

  std::size_t order() const { return arith_->order(); }
  Representation representation() const noexcept { return rep_; }
  const GroupInfo& info() const noexcept { return info_; }
  const std::string& name() const noexcept { return info_.name; }
  const std::vector<Index>& generators() const noexcept { return generators_; }

  static constexpr Index identity() noexcept { return 0; }

  bool contains(Index a) const { return a < order(); }

  Index multiply(Index a, Index b) const { return arith_->multiply(a, b); }
  Index inverse(Index a) const { return arith_->inverse(a); }
  // g^-1 x g
  Index conjugate(Index x, Index g) const { return multiply(multiply(inverse(g), x), g); }
  Index commutator(Index x, Index y) const { return multiply(multiply(inverse(x), inverse(y)), multiply(x, y)); }

  Index power(Index x, u64 e) const {
    Index result = identity();
    while (e != 0) {
      if (e & 1U) result = multiply(result, x);
      x = multiply(x, x);
      e >>= 1U;
    }
    return result;
  }

  u64 element_order(Index x) const {
    u64 n = 1;
    for (Index y = x; y != identity(); y = multiply(y, x)) ++n;
    return n;
  }

  Code code(Index a) const { return arith_->code(a); }
  Code code_bound() const { return arith_->code_bound(); }
  std::optional<Index> find(Code c) const { return arith_->find(c); }

  // Tagged fixed-width serialization: representation byte then the code,
  // big-endian.
  std::vector<std::uint8_t> encode(Index a) const {
    std::vector<std::uint8_t> out(9);
    out[0] = static_cast<std::uint8_t>(rep_);
    Code c = code(a);
    for (int i = 8; i >= 1; --i) {
      out[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(c & 0xFFU);
      c >>= 8U;
    }
    return out;
  }

  const detail::GroupArithmetic& arithmetic() const noexcept { return *arith_; }
  std::shared_ptr<const detail::GroupArithmetic> arithmetic_ptr() const noexcept { return arith_; }

  // Matrix groups only.
  const detail::MatrixArithmetic& matrix_arithmetic() const {
    if (rep_ != Representation::matrix) throw InvalidArgument(name() + " is not a matrix group");
    return static_cast<const detail::MatrixArithmetic&>(*arith_);
  }
  Matrix matrix(Index a) const { return matrix_arithmetic().matrix(a); }
  const FieldPtr& field() const { return matrix_arithmetic().field(); }

 private:
  Representation rep_;
  std::shared_ptr<const detail::GroupArithmetic> arith_;
  std::vector<Index> generators_;
  GroupInfo info_;
};

namespace detail {

class AffineArithmetic final : public GroupArithmetic {
 public:
  // act[h * |V| + v] = h . v; vectors are base-r integers in [0, |V|).
  AffineArithmetic(GroupPtr top, u64 prime, unsigned dim, std::vector<std::uint32_t> act)
      : top_(std::move(top)), prime_(prime), dim_(dim), act_(std::move(act)) {
    vsize_ = nt::ipow(prime_, dim_);
    if (act_.size() != vsize_ * top_->order()) throw InvalidArgument("affine arithmetic: action table size");
    if (prime_ != 2) {
      add_.resize(vsize_ * vsize_);
      for (u64 x = 0; x < vsize_; ++x)
        for (u64 y = 0; y < vsize_; ++y) add_[x * vsize_ + y] = static_cast<std::uint32_t>(digit_add(x, y));
      neg_.resize(vsize_);
      for (u64 x = 0; x < vsize_; ++x) neg_[x] = static_cast<std::uint32_t>(digit_neg(x));
    }
    bound_ = nt::checked_mul(top_->code_bound(), vsize_);
  }

  std::size_t order() const override { return vsize_ * top_->order(); }

  Index multiply(Index a, Index b) const override {
    const u64 h1 = a / vsize_, v1 = a % vsize_;
    const u64 h2 = b / vsize_, v2 = b % vsize_;
    const u64 moved = act_[h1 * vsize_ + v2];
    const u64 v = add(v1, moved);
    const u64 h = top_->multiply(static_cast<Index>(h1), static_cast<Index>(h2));
    return static_cast<Index>(h * vsize_ + v);
  }

  // (v, h)^-1 = (-(h^-1 . v), h^-1)
  Index inverse(Index a) const override {
    const u64 h = a / vsize_, v = a % vsize_;
    const u64 hi = top_->inverse(static_cast<Index>(h));
    const u64 w = neg(act_[hi * vsize_ + v]);
    return static_cast<Index>(hi * vsize_ + w);
  }

  Code code(Index a) const override { return top_->code(static_cast<Index>(a / vsize_)) * vsize_ + a % vsize_; }

  std::optional<Index> find(Code c) const override {
    auto h = top_->find(c / vsize_);
    if (!h) return std::nullopt;
    return static_cast<Index>(*h * vsize_ + c % vsize_);
  }

  Code code_bound() const override { return bound_; }

  u64 module_order() const { return vsize_; }
  const GroupPtr& top() const { return top_; }

 private:
  u64 add(u64 x, u64 y) const { return prime_ == 2 ? (x ^ y) : add_[x * vsize_ + y]; }
  u64 neg(u64 x) const { return prime_ == 2 ? x : neg_[x]; }

  u64 digit_add(u64 x, u64 y) const {
    u64 out = 0, scale = 1;
    for (unsigned i = 0; i < dim_; ++i, scale *= prime_, x /= prime_, y /= prime_)
      out += ((x % prime_ + y % prime_) % prime_) * scale;
    return out;
  }
  u64 digit_neg(u64 x) const {
    u64 out = 0, scale = 1;
    for (unsigned i = 0; i < dim_; ++i, scale *= prime_, x /= prime_) out += ((prime_ - x % prime_) % prime_) * scale;
    return out;
  }

  GroupPtr top_;
  u64 prime_;
  unsigned dim_;
  u64 vsize_ = 0;
  Code bound_ = 0;
  std::vector<std::uint32_t> act_;
  std::vector<std::uint32_t> add_;
  std::vector<std::uint32_t> neg_;
};

class ProductArithmetic final : public GroupArithmetic {
 public:
  ProductArithmetic(GroupPtr left, GroupPtr right) : left_(std::move(left)), right_(std::move(right)) {
    n2_ = right_->order();
    bound_ = nt::checked_mul(left_->code_bound(), right_->code_bound());
    if (bound_ > (Code{1} << 62U)) throw InvalidArgument("direct product: encoding exceeds 62 bits");
  }

  std::size_t order() const override { return left_->order() * n2_; }

  Index multiply(Index a, Index b) const override {
    const Index l = left_->multiply(static_cast<Index>(a / n2_), static_cast<Index>(b / n2_));
    const Index r = right_->multiply(static_cast<Index>(a % n2_), static_cast<Index>(b % n2_));
    return static_cast<Index>(l * n2_ + r);
  }
  Index inverse(Index a) const override {
    return static_cast<Index>(left_->inverse(static_cast<Index>(a / n2_)) * n2_ +
                              right_->inverse(static_cast<Index>(a % n2_)));
  }
  Code code(Index a) const override {
    return left_->code(static_cast<Index>(a / n2_)) * right_->code_bound() + right_->code(static_cast<Index>(a % n2_));
  }
  std::optional<Index> find(Code c) const override {
    auto l = left_->find(c / right_->code_bound());
    auto r = right_->find(c % right_->code_bound());
    if (!l || !r) return std::nullopt;
    return static_cast<Index>(*l * n2_ + *r);
  }
  Code code_bound() const override { return bound_; }

  const GroupPtr& left() const { return left_; }
  const GroupPtr& right() const { return right_; }

 private:
  GroupPtr left_, right_;
  std::size_t n2_ = 0;
  Code bound_ = 0;
};

}  // namespace detail

// Group generated by invertible matrices over `field`, enumerated by
// breadth-first closure.
inline GroupPtr matrix_group(const FieldPtr& field, std::size_t dim, const std::vector<Matrix>& gens, GroupInfo info,
                             std::size_t ceiling = kDefaultCeiling) {
  for (const Matrix& g : gens) {
    if (g.rows != dim || g.cols != dim) throw InvalidArgument("matrix_group: generator has wrong shape");
    if (linalg::determinant(*field, g) == 0) throw InvalidArgument("matrix_group: singular generator");
  }
  auto arith = std::make_shared<detail::MatrixArithmetic>(field, dim);
  arith->enumerate(gens, ceiling);
  std::vector<Index> gen_idx;
  for (const Matrix& g : gens) gen_idx.push_back(*arith->find_matrix(g));
  return std::make_shared<const FiniteGroup>(Representation::matrix, std::move(arith), std::move(gen_idx),
                                             std::move(info));
}

// SL2(q) as 2 x 2 matrices of determinant 1 over GF(q), generated by the two
// elementary transvections and the diagonal torus generator.
inline GroupPtr sl2_group(u64 q, std::size_t ceiling = kDefaultCeiling) {
  if (q < 2) throw InvalidArgument("sl2_group: q must be a prime power");
  auto pp = is_prime_power(q);
  if (!pp) throw InvalidArgument("sl2_group: q = " + std::to_string(q) + " is not a prime power");
  const u64 order = nt::checked_mul(q, nt::checked_mul(q - 1, q + 1));
  if (order > ceiling) throw CeilingExceeded(order, ceiling);
  auto field = field_make(pp->prime, static_cast<unsigned>(pp->exponent));
  const Field& f = *field;
  Matrix upper = Matrix::identity(2), lower = Matrix::identity(2), torus(2, 2);
  upper(0, 1) = 1;
  lower(1, 0) = 1;
  torus(0, 0) = f.generator();
  torus(1, 1) = f.inv(f.generator());
  std::vector<Matrix> gens{upper, lower, torus};
  GroupInfo info;
  info.name = "SL2(" + std::to_string(q) + ")";
  info.sl2_q = q;
  if (q >= 4) info.radical_quotient_primes = prime_set(order);
  auto g = matrix_group(field, 2, gens, std::move(info), ceiling);
  if (g->order() != order) throw InternalError("sl2_group: enumerated order mismatch");
  return g;
}

// C_n as 1 x 1 matrices over the least prime field GF(p) with n | p - 1.
inline GroupPtr cyclic_group(u64 n, std::size_t ceiling = kDefaultCeiling) {
  if (n < 1) throw InvalidArgument("cyclic_group: n must be positive");
  if (n > ceiling) throw CeilingExceeded(n, ceiling);
  u64 p = 2;
  while (p <= Field::kMaxOrder && ((p - 1) % n != 0 || !nt::is_prime(p))) ++p;
  if (p > Field::kMaxOrder) throw InvalidArgument("cyclic_group: n too large for a prime-field model");
  auto field = field_make(p, 1);
  Matrix gen(1, 1);
  gen(0, 0) = field->pow(field->generator(), static_cast<std::int64_t>((p - 1) / n));
  GroupInfo info;
  info.name = "C" + std::to_string(n);
  return matrix_group(field, 1, {gen}, std::move(info), ceiling);
}

enum class ExtraspecialType { heisenberg, quaternion, dihedral };

// Non-abelian groups of order t^3: for odd t the Heisenberg group of
// exponent t (unitriangular 3 x 3 over GF(t)); for t = 2 either Q8 inside
// SL2(3) or D8 as unitriangular 3 x 3 over GF(2).
inline GroupPtr extraspecial_group(u64 t, ExtraspecialType type, std::size_t ceiling = kDefaultCeiling) {
  if (!nt::is_prime(t)) throw InvalidArgument("extraspecial_group: t must be prime");
  GroupInfo info;
  if (t == 2 && type == ExtraspecialType::quaternion) {
    auto f3 = field_make(3, 1);
    Matrix i(2, 2), j(2, 2);
    i(0, 1) = 1;
    i(1, 0) = 2;
    j(0, 0) = 1;
    j(0, 1) = 1;
    j(1, 0) = 1;
    j(1, 1) = 2;
    info.name = "Q8";
    return matrix_group(f3, 2, {i, j}, std::move(info), ceiling);
  }
  if (type != (t == 2 ? ExtraspecialType::dihedral : ExtraspecialType::heisenberg)) {
    throw InvalidArgument("extraspecial_group: unsupported type for t = " + std::to_string(t));
  }
  auto f = field_make(t, 1);
  Matrix x = Matrix::identity(3), y = Matrix::identity(3);
  x(0, 1) = 1;
  y(1, 2) = 1;
  info.name = t == 2 ? "D8" : std::to_string(t) + "^(1+2)";
  return matrix_group(f, 3, {x, y}, std::move(info), ceiling);
}

inline GroupPtr direct_product(const GroupPtr& left, const GroupPtr& right, std::size_t ceiling = kDefaultCeiling) {
  const u64 order = nt::checked_mul(left->order(), right->order());
  if (order > ceiling) throw CeilingExceeded(order, ceiling);
  auto arith = std::make_shared<detail::ProductArithmetic>(left, right);
  const Index n2 = static_cast<Index>(right->order());
  std::vector<Index> gens;
  for (Index g : left->generators()) gens.push_back(g * n2);
  for (Index h : right->generators()) gens.push_back(h);
  GroupInfo info;
  info.name = left->name() + " x " + right->name();
  info.radical_quotient_primes = left->info().radical_quotient_primes | right->info().radical_quotient_primes;
  return std::make_shared<const FiniteGroup>(Representation::product, std::move(arith), std::move(gens),
                                             std::move(info));
}

// Explicit subgroup given by its elements, kept sorted by code.
struct Subgroup {
  std::vector<Index> elements;  // ascending code order
  std::size_t order() const noexcept { return elements.size(); }
  bool contains(Index x) const noexcept { return std::find(elements.begin(), elements.end(), x) != elements.end(); }
};

inline bool same_subgroup(const FiniteGroup& g, const Subgroup& a, const Subgroup& b) {
  if (a.order() != b.order()) return false;
  for (std::size_t i = 0; i < a.order(); ++i) {
    if (g.code(a.elements[i]) != g.code(b.elements[i])) return false;
  }
  return true;
}

inline Subgroup make_subgroup(const FiniteGroup& g, std::vector<Index> elements) {
  std::sort(elements.begin(), elements.end(), [&](Index x, Index y) { return g.code(x) < g.code(y); });
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  return Subgroup{std::move(elements)};
}

// Closure of `gens` inside g.
inline Subgroup generated_subgroup(const FiniteGroup& g, const std::vector<Index>& gens) {
  std::vector<char> seen(g.order(), 0);
  std::vector<Index> elems{FiniteGroup::identity()};
  seen[FiniteGroup::identity()] = 1;
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (Index s : gens) {
      Index y = g.multiply(elems[head], s);
      if (!seen[y]) {
        seen[y] = 1;
        elems.push_back(y);
      }
    }
  }
  return make_subgroup(g, std::move(elems));
}

inline Subgroup conjugate_subgroup(const FiniteGroup& g, const Subgroup& s, Index by) {
  std::vector<Index> out;
  out.reserve(s.order());
  for (Index x : s.elements) out.push_back(g.conjugate(x, by));
  return make_subgroup(g, std::move(out));
}

// True when every element of `u` normalizes `t`.
inline bool normalizes(const FiniteGroup& g, const Subgroup& u, const Subgroup& t) {
  std::vector<char> in_t(g.order(), 0);
  for (Index x : t.elements) in_t[x] = 1;
  for (Index y : u.elements)
    for (Index x : t.elements)
      if (!in_t[g.conjugate(x, y)]) return false;
  return true;
}

// All q + 1 Sylow 2-subgroups of SL2(q), q even, as the distinct conjugates
// of the upper unitriangular subgroup, ordered by least code.
inline std::vector<Subgroup> sylow2_subgroups_sl2(const FiniteGroup& g) {
  if (!g.info().sl2_q) throw InvalidArgument("sylow2_subgroups_sl2: group is not SL2(q)");
  const u64 q = *g.info().sl2_q;
  if (q % 2 != 0) throw InvalidArgument("sylow2_subgroups_sl2: q must be even");
  const Field& f = *g.field();
  std::vector<Index> unipotent;
  for (FieldValue x = 0; x < f.order(); ++x) {
    Matrix m = Matrix::identity(2);
    m(0, 1) = x;
    unipotent.push_back(*g.matrix_arithmetic().find_matrix(m));
  }
  Subgroup base = make_subgroup(g, std::move(unipotent));
  std::vector<Subgroup> found{base};
  std::unordered_map<Code, std::vector<std::size_t>> by_second;  // bucket by the second-least code
  auto key = [&](const Subgroup& s) { return g.code(s.elements.size() > 1 ? s.elements[1] : s.elements[0]); };
  by_second[key(base)].push_back(0);
  for (Index x = 0; x < g.order(); ++x) {
    Subgroup c = conjugate_subgroup(g, base, x);
    auto& bucket = by_second[key(c)];
    bool dup = false;
    for (std::size_t i : bucket) dup = dup || same_subgroup(g, found[i], c);
    if (!dup) {
      bucket.push_back(found.size());
      found.push_back(std::move(c));
    }
  }
  std::sort(found.begin(), found.end(), [&](const Subgroup& a, const Subgroup& b) {
    for (std::size_t i = 0; i < a.order(); ++i)
      if (g.code(a.elements[i]) != g.code(b.elements[i])) return g.code(a.elements[i]) < g.code(b.elements[i]);
    return false;
  });
  return found;
}

inline std::vector<Subgroup> sylow2_subgroups_sl2(u64 q, std::size_t ceiling = kDefaultCeiling) {
  if (q % 2 != 0) throw InvalidArgument("sylow2_subgroups_sl2: q must be even");
  return sylow2_subgroups_sl2(*sl2_group(q, ceiling));
}

}  // namespace cdg
