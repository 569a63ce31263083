#pragma once

// Linear actions of enumerated groups on GF(r)^n, the module catalogue and
// the split extension V x| H.
//
// Vectors are encoded as base-r integers: coordinate i is digit i. Actions
// are left actions, (gh).v = g.(h.v), stored as one n x n matrix over GF(r)
// per element of the acting group.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cdgraph/error.hpp"
#include "cdgraph/gf.hpp"
#include "cdgraph/group.hpp"
#include "cdgraph/numtheory.hpp"

namespace cdg {

class ModuleAction {
 public:
  // Images for every element, indexed like the group. Verified to be a
  // homomorphism into GL_n(r) before the object is returned.
  static ModuleAction from_images(GroupPtr group, FieldPtr field, std::string label, std::vector<Matrix> images) {
    if (field->degree() != 1) throw InvalidArgument("ModuleAction: coefficients must lie in a prime field");
    if (images.size() != group->order()) throw InvalidArgument("ModuleAction: one image per group element required");
    const std::size_t n = images.front().rows;
    for (const Matrix& m : images) {
      if (m.rows != n || m.cols != n) throw InvalidArgument("ModuleAction: images must be square of equal size");
    }
    if (images[FiniteGroup::identity()] != Matrix::identity(n)) {
      throw InvalidArgument("ModuleAction: identity does not act trivially");
    }
    for (Index x = 0; x < group->order(); ++x) {
      for (Index s : group->generators()) {
        if (images[group->multiply(x, s)] != linalg::multiply(*field, images[x], images[s])) {
          throw InvalidArgument("ModuleAction: images do not define a homomorphism");
        }
      }
    }
    ModuleAction a;
    a.group_ = std::move(group);
    a.field_ = std::move(field);
    a.dim_ = static_cast<unsigned>(n);
    a.label_ = std::move(label);
    a.images_ = std::move(images);
    a.vsize_ = nt::ipow(a.field_->order(), a.dim_);
    const Matrix id = Matrix::identity(n);
    for (Index x = 0; x < a.group_->order(); ++x)
      if (a.images_[x] == id) a.kernel_.push_back(x);
    return a;
  }

  static ModuleAction from_function(GroupPtr group, FieldPtr field, std::string label,
                                    const std::function<Matrix(Index)>& image_of) {
    std::vector<Matrix> images;
    images.reserve(group->order());
    for (Index x = 0; x < group->order(); ++x) images.push_back(image_of(x));
    return from_images(std::move(group), std::move(field), std::move(label), std::move(images));
  }

  // Extends generator images along a breadth-first traversal of the group;
  // returns nullopt when the assignment is not a homomorphism.
  static std::optional<ModuleAction> from_generator_images(GroupPtr group, FieldPtr field, std::string label,
                                                           const std::vector<Matrix>& gen_images) {
    const auto& gens = group->generators();
    if (gen_images.size() != gens.size()) throw InvalidArgument("from_generator_images: one image per generator");
    const std::size_t n = gen_images.front().rows;
    std::vector<std::optional<Matrix>> img(group->order());
    img[FiniteGroup::identity()] = Matrix::identity(n);
    std::vector<Index> queue{FiniteGroup::identity()};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Index x = queue[head];
      for (std::size_t k = 0; k < gens.size(); ++k) {
        const Index y = group->multiply(x, gens[k]);
        Matrix m = linalg::multiply(*field, *img[x], gen_images[k]);
        if (!img[y]) {
          img[y] = std::move(m);
          queue.push_back(y);
        } else if (*img[y] != m) {
          return std::nullopt;
        }
      }
    }
    std::vector<Matrix> images;
    images.reserve(img.size());
    for (auto& m : img) images.push_back(std::move(*m));
    return from_images(std::move(group), std::move(field), std::move(label), std::move(images));
  }

  const GroupPtr& group() const noexcept { return group_; }
  const FieldPtr& field() const noexcept { return field_; }
  u64 prime() const noexcept { return field_->characteristic(); }
  unsigned dimension() const noexcept { return dim_; }
  u64 module_order() const noexcept { return vsize_; }
  const std::string& label() const noexcept { return label_; }
  const Matrix& image(Index h) const { return images_.at(h); }
  const std::vector<Index>& kernel() const noexcept { return kernel_; }
  bool faithful() const noexcept { return kernel_.size() == 1; }

  std::vector<FieldValue> coordinates(u64 v) const {
    std::vector<FieldValue> c(dim_);
    for (unsigned i = 0; i < dim_; ++i, v /= prime()) c[i] = static_cast<FieldValue>(v % prime());
    return c;
  }

  u64 vector_code(const std::vector<FieldValue>& c) const {
    u64 v = 0;
    for (std::size_t i = c.size(); i-- > 0;) v = v * prime() + c[i];
    return v;
  }

  u64 apply(Index h, u64 v) const {
    const Matrix& m = images_[h];
    const Field& f = *field_;
    const auto c = coordinates(v);
    u64 out = 0;
    for (unsigned i = dim_; i-- > 0;) {
      FieldValue acc = 0;
      for (unsigned j = 0; j < dim_; ++j) acc = f.add(acc, f.mul(m(i, j), c[j]));
      out = out * prime() + acc;
    }
    return out;
  }

 private:
  ModuleAction() = default;

  GroupPtr group_;
  FieldPtr field_;
  unsigned dim_ = 0;
  std::string label_;
  std::vector<Matrix> images_;
  std::vector<Index> kernel_;
  u64 vsize_ = 0;
};

namespace catalog {

// Standard module of SL2(q) viewed over the prime field.
inline ModuleAction natural(u64 q, std::string label = {}, std::size_t ceiling = kDefaultCeiling) {
  auto g = sl2_group(q, ceiling);
  auto big = g->field();
  auto prime = field_make(big->characteristic(), 1);
  if (label.empty()) label = "natural(" + std::to_string(q) + ")";
  return ModuleAction::from_function(g, prime, std::move(label),
                                     [&](Index h) { return linalg::restrict_scalars(*big, g->matrix(h)); });
}

// SL2(4) = A5 permuting the five points of the projective line over GF(4),
// restricted to the sum-zero submodule of GF(2)^5 with basis e_i + e_4.
// This is the 4-dimensional orthogonal module of minus type.
inline ModuleAction omega4_minus() {
  auto g = sl2_group(4);
  const Field& f = *g->field();
  // Points: (x : 1) for x in GF(4) are 0..3, (1 : 0) is 4.
  auto point_of = [&](FieldValue x, FieldValue y) -> unsigned {
    if (y == 0) return 4;
    return f.div(x, y);
  };
  auto perm_of = [&](Index h) {
    Matrix m = g->matrix(h);
    std::array<unsigned, 5> perm{};
    for (unsigned p = 0; p < 5; ++p) {
      const FieldValue x = p == 4 ? 1 : static_cast<FieldValue>(p);
      const FieldValue y = p == 4 ? 0 : 1;
      perm[p] = point_of(f.add(f.mul(m(0, 0), x), f.mul(m(0, 1), y)), f.add(f.mul(m(1, 0), x), f.mul(m(1, 1), y)));
    }
    return perm;
  };
  return ModuleAction::from_function(g, field_make(2, 1), "V1", [&](Index h) {
    auto perm = perm_of(h);
    Matrix m(4, 4);
    for (unsigned i = 0; i < 4; ++i) {
      // e_i + e_4 maps to e_perm(i) + e_perm(4).
      for (unsigned target : {perm[i], perm[4]})
        if (target != 4) m(target, i) ^= 1U;
    }
    return m;
  });
}

// Twisted tensor product R(1) (x) R(1)^(s) of SL2(q), q = s^2 = 2^a with a
// even, descended to GF(s) and then restricted to GF(2): dimension 2a.
//
// The semilinear involution phi(c)_{ij} = c_{ji}^s commutes with the
// action, so its fixed points {(x, y, y^s, z) : x, z in GF(s), y in GF(q)}
// form the GF(2)-module used here.
inline ModuleAction twisted_tensor(u64 q, std::size_t ceiling = kDefaultCeiling) {
  auto pp = is_prime_power(q);
  if (!pp || pp->prime != 2 || pp->exponent % 2 != 0) {
    throw InvalidArgument("twisted_tensor: q must be an even power of 2");
  }
  const unsigned a = static_cast<unsigned>(pp->exponent);
  const unsigned half = a / 2;
  auto g = sl2_group(q, ceiling);
  auto big = g->field();
  const Field& f = *big;

  // GF(2)-basis of the subfield GF(s) inside GF(q), chosen greedily.
  std::vector<FieldValue> sub_basis;
  std::vector<FieldValue> span{0};
  for (FieldValue x = 1; x < f.order() && sub_basis.size() < half; ++x) {
    if (f.frobenius(x, half) != x) continue;
    if (std::find(span.begin(), span.end(), x) != span.end()) continue;
    sub_basis.push_back(x);
    const std::size_t n = span.size();
    for (std::size_t i = 0; i < n; ++i) span.push_back(f.add(span[i], x));
  }
  // Coordinates of subfield elements in sub_basis.
  std::vector<std::uint32_t> sub_coord(f.order(), UINT32_MAX);
  for (std::uint32_t mask = 0; mask < (1U << half); ++mask) {
    FieldValue x = 0;
    for (unsigned i = 0; i < half; ++i)
      if (mask & (1U << i)) x = f.add(x, sub_basis[i]);
    sub_coord[x] = mask;
  }

  // Basis of the fixed space: (b,0,0,0), (0,y,y^s,0), (0,0,0,b).
  const unsigned dim = 2 * a;
  std::vector<std::array<FieldValue, 4>> basis;
  for (FieldValue b : sub_basis) basis.push_back({b, 0, 0, 0});
  for (unsigned j = 0; j < a; ++j) {
    const auto y = static_cast<FieldValue>(u64{1} << j);  // X^j
    basis.push_back({0, y, f.frobenius(y, half), 0});
  }
  for (FieldValue b : sub_basis) basis.push_back({0, 0, 0, b});

  auto coords = [&](const std::array<FieldValue, 4>& v) {
    if (f.frobenius(v[1], half) != v[2] || sub_coord[v[0]] == UINT32_MAX || sub_coord[v[3]] == UINT32_MAX) {
      throw InternalError("twisted_tensor: vector left the descended subspace");
    }
    std::vector<FieldValue> c(dim, 0);
    for (unsigned i = 0; i < half; ++i) {
      c[i] = (sub_coord[v[0]] >> i) & 1U;
      c[half + a + i] = (sub_coord[v[3]] >> i) & 1U;
    }
    auto yc = f.coefficients(v[1]);
    for (unsigned j = 0; j < a; ++j) c[half + j] = yc[j];
    return c;
  };

  std::string label = "twisted(" + std::to_string(q) + ")";
  return ModuleAction::from_function(g, field_make(2, 1), label, [&](Index h) {
    const Matrix m = g->matrix(h);
    Matrix ms(2, 2);
    for (std::size_t i = 0; i < 4; ++i) ms.data[i] = f.frobenius(m.data[i], half);
    const Matrix k = linalg::kronecker(f, m, ms);
    Matrix out(dim, dim);
    for (unsigned col = 0; col < dim; ++col) {
      std::array<FieldValue, 4> w{};
      for (std::size_t i = 0; i < 4; ++i) {
        FieldValue acc = 0;
        for (std::size_t j = 0; j < 4; ++j) acc = f.add(acc, f.mul(k(i, j), basis[col][j]));
        w[i] = acc;
      }
      auto c = coords(w);
      for (unsigned r = 0; r < dim; ++r) out(r, col) = c[r];
    }
    return out;
  });
}

// SL2(5) inside SL2(9) (as 2.A5 < 2.A6), standard module of SL2(9)
// restricted to GF(3): the faithful 4-dimensional GF(3)-module of SL2(5).
// The embedding is found by searching images of the two transvection
// generators in a fixed order, so the result is deterministic.
inline ModuleAction sl2_5_in_sl4_3() {
  auto h = sl2_group(5);
  auto t = sl2_group(9);
  const auto& hg = h->generators();
  std::vector<Index> order5;
  for (Index x = 0; x < t->order(); ++x)
    if (t->element_order(x) == 5) order5.push_back(x);

  std::vector<Index> img(h->order());
  auto try_pair = [&](Index a, Index b) {
    std::fill(img.begin(), img.end(), UINT32_MAX);
    img[FiniteGroup::identity()] = FiniteGroup::identity();
    std::vector<Index> queue{FiniteGroup::identity()};
    const std::array<std::pair<Index, Index>, 2> edges{{{hg[0], a}, {hg[1], b}}};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Index x = queue[head];
      for (auto [s, S] : edges) {
        const Index y = h->multiply(x, s);
        const Index Y = t->multiply(img[x], S);
        if (img[y] == UINT32_MAX) {
          img[y] = Y;
          queue.push_back(y);
        } else if (img[y] != Y) {
          return false;
        }
      }
    }
    if (queue.size() != h->order()) return false;
    std::vector<Index> sorted = img;
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  };

  for (Index a : order5) {
    for (Index b : order5) {
      if (!try_pair(a, b)) continue;
      auto big = t->field();
      return ModuleAction::from_function(h, field_make(3, 1), "W",
                                         [&](Index x) { return linalg::restrict_scalars(*big, t->matrix(img[x])); });
    }
  }
  throw InternalError("no embedding of SL2(5) into SL2(9) found");
}

}  // namespace catalog

// Catalogue lookup by label: V0, V1, W, U, natural (needs q), twisted (needs q).
inline ModuleAction module_catalog(const std::string& label, std::optional<u64> q = std::nullopt,
                                   std::size_t ceiling = kDefaultCeiling) {
  if (label == "V0") return catalog::natural(4, "V0");
  if (label == "V1") return catalog::omega4_minus();
  if (label == "W") return catalog::sl2_5_in_sl4_3();
  if (label == "U") return catalog::natural(5, "U");
  if (label == "natural") {
    if (!q) throw InvalidArgument("module_catalog: natural module needs q");
    auto pp = q >= 2 ? is_prime_power(*q) : std::nullopt;
    if (!pp || pp->prime != 2 || pp->exponent > 5) {
      throw InvalidArgument("module_catalog: natural(q) needs q = 2^a with a <= 5");
    }
    return catalog::natural(*q, {}, ceiling);
  }
  if (label == "twisted") {
    if (!q) throw InvalidArgument("module_catalog: twisted module needs q");
    return catalog::twisted_tensor(*q, ceiling);
  }
  throw InvalidArgument("module_catalog: unknown module label '" + label + "'");
}

// Split extension V x| H on pairs (v, h) with
// (v1, h1)(v2, h2) = (v1 + h1.v2, h1 h2). Index = h * |V| + v, so the
// first |V| indices are the normal subgroup V.
inline GroupPtr semidirect(const ModuleAction& action, std::size_t ceiling = kDefaultCeiling) {
  const GroupPtr& h = action.group();
  const u64 vsize = action.module_order();
  const u64 order = nt::checked_mul(vsize, h->order());
  if (order > ceiling) throw CeilingExceeded(order, ceiling);
  std::vector<std::uint32_t> act(order);
  for (Index x = 0; x < h->order(); ++x)
    for (u64 v = 0; v < vsize; ++v) act[x * vsize + v] = static_cast<std::uint32_t>(action.apply(x, v));
  auto arith = std::make_shared<detail::AffineArithmetic>(h, action.prime(), action.dimension(), std::move(act));
  std::vector<Index> gens;
  for (unsigned i = 0; i < action.dimension(); ++i) gens.push_back(static_cast<Index>(nt::ipow(action.prime(), i)));
  for (Index s : h->generators()) gens.push_back(static_cast<Index>(s * vsize));
  GroupInfo info;
  info.name = action.label() + ":" + h->name();
  info.radical_quotient_primes = h->info().radical_quotient_primes;
  info.module_order = vsize;
  return std::make_shared<const FiniteGroup>(Representation::affine, std::move(arith), std::move(gens),
                                             std::move(info));
}

}  // namespace cdg
