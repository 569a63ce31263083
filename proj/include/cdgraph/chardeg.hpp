#pragma once

// Irreducible character degrees from the class algebra, working over GF(p)
// with p = 1 mod exp(G). The class matrices are split simultaneously into
// one-dimensional common eigenspaces; each eigenvector is a central
// character, from which chi(1)^2 = |G| / sum_k w_k w_k' / |C_k| (mod p).

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "cdgraph/classes.hpp"
#include "cdgraph/error.hpp"
#include "cdgraph/group.hpp"
#include "cdgraph/numtheory.hpp"

namespace cdg {

// Sorted (degree, multiplicity) pairs.
class DegreeMultiset {
 public:
  DegreeMultiset() = default;
  explicit DegreeMultiset(const std::vector<u64>& degrees) {
    std::map<u64, u64> counts;
    for (u64 d : degrees) {
      if (d == 0) throw InvalidArgument("DegreeMultiset: degree must be positive");
      ++counts[d];
    }
    entries_.assign(counts.begin(), counts.end());
  }
  static DegreeMultiset from_pairs(const std::vector<std::pair<u64, u64>>& pairs) {
    std::vector<u64> flat;
    for (auto [d, m] : pairs) flat.insert(flat.end(), m, d);
    return DegreeMultiset(flat);
  }

  const std::vector<std::pair<u64, u64>>& entries() const noexcept { return entries_; }
  std::vector<u64> degree_set() const {
    std::vector<u64> out;
    for (auto [d, m] : entries_) out.push_back(d);
    return out;
  }
  u64 multiplicity(u64 d) const {
    for (auto [e, m] : entries_)
      if (e == d) return m;
    return 0;
  }
  u64 count() const {
    u64 n = 0;
    for (auto [d, m] : entries_) n += m;
    return n;
  }
  u64 sum_of_squares() const {
    u64 s = 0;
    for (auto [d, m] : entries_) s += m * d * d;
    return s;
  }

  friend bool operator==(const DegreeMultiset&, const DegreeMultiset&) = default;

  friend std::ostream& operator<<(std::ostream& os, const DegreeMultiset& d) {
    os << '{';
    bool first = true;
    for (auto [deg, m] : d.entries_) {
      os << (first ? "" : ", ") << deg;
      if (m > 1) os << 'x' << m;
      first = false;
    }
    return os << '}';
  }

 private:
  std::vector<std::pair<u64, u64>> entries_;
};

// Products of all pairs: cd of a direct product.
inline DegreeMultiset degree_product(const DegreeMultiset& a, const DegreeMultiset& b) {
  std::vector<std::pair<u64, u64>> pairs;
  for (auto [d1, m1] : a.entries())
    for (auto [d2, m2] : b.entries()) pairs.emplace_back(d1 * d2, m1 * m2);
  return DegreeMultiset::from_pairs(pairs);
}

// SL2(q), q = 2^a >= 4: 1, the Steinberg character q, q/2 - 1 characters of
// degree q + 1 and q/2 of degree q - 1.
inline DegreeMultiset sl2_degrees_closed_form(u64 q) {
  auto pp = q >= 2 ? is_prime_power(q) : std::nullopt;
  if (!pp || pp->prime != 2 || pp->exponent < 2) throw InvalidArgument("sl2_degrees_closed_form: q must be 2^a, a >= 2");
  return DegreeMultiset::from_pairs({{1, 1}, {q, 1}, {q + 1, q / 2 - 1}, {q - 1, q / 2}});
}

namespace detail {

class ModP {
 public:
  explicit ModP(u64 p) : p_(p) {}
  u64 p() const { return p_; }
  u64 add(u64 a, u64 b) const { return a + b >= p_ ? a + b - p_ : a + b; }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p_ - b; }
  u64 mul(u64 a, u64 b) const { return nt::mul_mod(a, b, p_); }
  u64 inv(u64 a) const {
    if (a == 0) throw InternalError("ModP::inv: zero");
    return nt::pow_mod(a, p_ - 2, p_);
  }

 private:
  u64 p_;
};

using Poly = std::vector<u64>;  // lowest coefficient first, trimmed

inline void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline Poly poly_mod(const ModP& F, Poly a, const Poly& b) {
  trim(a);
  const u64 lead_inv = F.inv(b.back());
  while (a.size() >= b.size()) {
    const u64 c = F.mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = F.sub(a[shift + i], F.mul(c, b[i]));
    trim(a);
  }
  return a;
}

inline Poly poly_div(const ModP& F, Poly a, const Poly& b) {
  trim(a);
  if (a.size() < b.size()) return {};
  Poly q(a.size() - b.size() + 1, 0);
  const u64 lead_inv = F.inv(b.back());
  while (a.size() >= b.size()) {
    const u64 c = F.mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = F.sub(a[shift + i], F.mul(c, b[i]));
    a.pop_back();
    trim(a);
  }
  trim(q);
  return q;
}

inline Poly poly_mulmod(const ModP& F, const Poly& a, const Poly& b, const Poly& m) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = F.add(c[i + j], F.mul(a[i], b[j]));
  return poly_mod(F, std::move(c), m);
}

inline Poly poly_powmod(const ModP& F, Poly base, u64 e, const Poly& m) {
  Poly result = poly_mod(F, {1}, m);
  base = poly_mod(F, std::move(base), m);
  while (e != 0) {
    if (e & 1U) result = poly_mulmod(F, result, base, m);
    base = poly_mulmod(F, base, base, m);
    e >>= 1U;
  }
  return result;
}

inline Poly monic(const ModP& F, Poly f) {
  trim(f);
  if (f.empty()) return f;
  const u64 s = F.inv(f.back());
  for (u64& c : f) c = F.mul(c, s);
  return f;
}

inline Poly poly_gcd(const ModP& F, Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(F, std::move(a));
}

// Distinct roots in GF(p) of f, ascending.
inline std::vector<u64> distinct_roots(const ModP& F, const Poly& f) {
  const Poly fm = monic(F, f);
  if (fm.size() <= 1) return {};
  Poly xp = poly_powmod(F, {0, 1}, F.p(), fm);
  xp.resize(std::max<std::size_t>(xp.size(), 2), 0);
  xp[1] = F.sub(xp[1], 1);
  Poly g = poly_gcd(F, fm, xp);
  std::vector<u64> roots;
  std::vector<Poly> stack{g};
  while (!stack.empty()) {
    Poly h = std::move(stack.back());
    stack.pop_back();
    if (h.size() <= 1) continue;
    if (h.size() == 2) {
      roots.push_back(F.sub(0, h[0]));
      continue;
    }
    for (u64 a = 0;; ++a) {
      Poly t = poly_powmod(F, {a % F.p(), 1}, (F.p() - 1) / 2, h);
      if (t.empty()) t = {0};
      t[0] = F.sub(t[0], 1);
      Poly d = poly_gcd(F, h, t);
      if (d.size() > 1 && d.size() < h.size()) {
        stack.push_back(poly_div(F, h, d));
        stack.push_back(std::move(d));
        break;
      }
      if (a > 4 * F.p()) throw InternalError("distinct_roots: splitting did not terminate");
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

using Mat = std::vector<std::vector<u64>>;

inline Poly characteristic_polynomial(const ModP& F, Mat h) {
  const std::size_t n = h.size();
  // Similarity reduction to upper Hessenberg form.
  for (std::size_t c = 0; c + 2 < n; ++c) {
    std::size_t piv = c + 1;
    while (piv < n && h[piv][c] == 0) ++piv;
    if (piv == n) continue;
    if (piv != c + 1) {
      std::swap(h[piv], h[c + 1]);
      for (std::size_t i = 0; i < n; ++i) std::swap(h[i][piv], h[i][c + 1]);
    }
    const u64 inv = F.inv(h[c + 1][c]);
    for (std::size_t i = c + 2; i < n; ++i) {
      if (h[i][c] == 0) continue;
      const u64 f = F.mul(h[i][c], inv);
      for (std::size_t j = 0; j < n; ++j) h[i][j] = F.sub(h[i][j], F.mul(f, h[c + 1][j]));
      for (std::size_t j = 0; j < n; ++j) h[j][c + 1] = F.add(h[j][c + 1], F.mul(f, h[j][i]));
    }
  }
  std::vector<Poly> polys(n + 1);
  polys[0] = {1};
  for (std::size_t m = 1; m <= n; ++m) {
    Poly cur(m + 1, 0);
    const Poly& prev = polys[m - 1];
    for (std::size_t i = 0; i < prev.size(); ++i) {
      cur[i + 1] = F.add(cur[i + 1], prev[i]);
      cur[i] = F.sub(cur[i], F.mul(h[m - 1][m - 1], prev[i]));
    }
    u64 prod = 1;
    for (std::size_t i = m - 1; i-- > 0;) {
      prod = F.mul(prod, h[i + 1][i]);
      if (prod == 0) break;
      const u64 coef = F.mul(h[i][m - 1], prod);
      for (std::size_t k = 0; k < polys[i].size(); ++k) cur[k] = F.sub(cur[k], F.mul(coef, polys[i][k]));
    }
    polys[m] = std::move(cur);
  }
  return polys[n];
}

// Row-reduces; returns pivot columns.
inline std::vector<std::size_t> rref(const ModP& F, Mat& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t piv = row;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[row]);
    const u64 s = F.inv(m[row][c]);
    for (u64& x : m[row]) x = F.mul(x, s);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][c] == 0) continue;
      const u64 f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] = F.sub(m[i][j], F.mul(f, m[row][j]));
    }
    pivots.push_back(c);
    ++row;
  }
  m.resize(row);
  return pivots;
}

inline Mat nullspace(const ModP& F, Mat a, std::size_t cols) {
  auto pivots = rref(F, a, cols);
  std::vector<char> is_pivot(cols, 0);
  for (auto c : pivots) is_pivot[c] = 1;
  Mat basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<u64> v(cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = F.sub(0, a[r][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Structure constants of the class algebra, one class at a time:
// row l, column k of matrix j is #{x in C_j : x^-1 z_k in C_l}, so that
// the central character vector is a right eigenvector.
class ClassAlgebra {
 public:
  ClassAlgebra(const FiniteGroup& g, const ClassData& cd, const ModP& F) : g_(g), cd_(cd), F_(F) {
    cache_.resize(cd.count());
  }

  const Mat& matrix(std::size_t j) {
    if (!cache_[j].empty()) return cache_[j];
    const std::size_t k = cd_.count();
    Mat m(k, std::vector<u64>(k, 0));
    for (Index x : cd_.classes[j].members) {
      const Index xi = g_.inverse(x);
      for (std::size_t col = 0; col < k; ++col) {
        const std::uint32_t l = cd_.class_of[g_.multiply(xi, cd_.classes[col].representative)];
        m[l][col] = F_.add(m[l][col], 1);
      }
    }
    cache_[j] = std::move(m);
    return cache_[j];
  }

 private:
  const FiniteGroup& g_;
  const ClassData& cd_;
  const ModP& F_;
  std::vector<Mat> cache_;
};

inline u64 isqrt(u64 n) {
  u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace detail

// lcm of the element orders of the class representatives.
inline u64 group_exponent(const FiniteGroup& g, const ClassData& cd) {
  u64 e = 1;
  for (const auto& c : cd.classes) e = nt::lcm(e, g.element_order(c.representative));
  return e;
}

// The `skip`-th (0-based) prime p = 1 mod exponent with p > 2 sqrt(order).
inline u64 dixon_prime(u64 order, u64 exponent, unsigned skip = 0) {
  const u64 bound = 2 * detail::isqrt(order) + 2;
  u64 p = (bound / exponent) * exponent + 1;
  while (p <= bound) p += exponent;
  for (;; p += exponent) {
    if (!nt::is_prime(p)) continue;
    if (skip == 0) return p;
    --skip;
  }
}

inline DegreeMultiset character_degrees(const FiniteGroup& g, const ClassData& cd,
                                        std::optional<u64> working_prime = std::nullopt) {
  using detail::Mat;
  const u64 order = g.order();
  const u64 exponent = group_exponent(g, cd);
  const u64 p = working_prime ? *working_prime : dixon_prime(order, exponent);
  if (!nt::is_prime(p) || (p - 1) % exponent != 0 || p <= 2 * detail::isqrt(order) + 1) {
    throw InvalidArgument("character_degrees: working prime must be 1 mod exp(G) and exceed 2 sqrt|G|");
  }
  const detail::ModP F(p);
  const std::size_t k = cd.count();
  detail::ClassAlgebra algebra(g, cd, F);

  // Subspaces of GF(p)^k, each as RREF rows with pivot columns.
  struct Space {
    Mat rows;
    std::vector<std::size_t> pivots;
  };
  std::vector<Space> spaces;
  {
    Mat id(k, std::vector<u64>(k, 0));
    for (std::size_t i = 0; i < k; ++i) id[i][i] = 1;
    std::vector<std::size_t> piv(k);
    for (std::size_t i = 0; i < k; ++i) piv[i] = i;
    spaces.push_back({std::move(id), std::move(piv)});
  }

  auto all_split = [&] {
    return std::all_of(spaces.begin(), spaces.end(), [](const Space& s) { return s.rows.size() == 1; });
  };

  for (std::size_t j = 0; j < k && !all_split(); ++j) {
    std::vector<Space> next;
    for (Space& s : spaces) {
      const std::size_t d = s.rows.size();
      if (d == 1) {
        next.push_back(std::move(s));
        continue;
      }
      const Mat& m = algebra.matrix(j);
      // Restriction of m to the subspace, in the coordinates given by the
      // pivot entries of the RREF basis.
      Mat images(d, std::vector<u64>(k, 0));
      for (std::size_t b = 0; b < d; ++b)
        for (std::size_t l = 0; l < k; ++l) {
          u64 acc = 0;
          for (std::size_t c = 0; c < k; ++c)
            if (s.rows[b][c] != 0 && m[l][c] != 0) acc = F.add(acc, F.mul(m[l][c], s.rows[b][c]));
          images[b][l] = acc;
        }
      Mat r(d, std::vector<u64>(d, 0));
      for (std::size_t b = 0; b < d; ++b)
        for (std::size_t i = 0; i < d; ++i) r[i][b] = images[b][s.pivots[i]];
      const auto roots = detail::distinct_roots(F, detail::characteristic_polynomial(F, r));
      if (roots.size() <= 1) {
        next.push_back(std::move(s));
        continue;
      }
      std::size_t covered = 0;
      for (u64 lambda : roots) {
        Mat shifted = r;
        for (std::size_t i = 0; i < d; ++i) shifted[i][i] = F.sub(shifted[i][i], lambda);
        Mat coords = detail::nullspace(F, std::move(shifted), d);
        Mat vecs;
        for (const auto& c : coords) {
          std::vector<u64> v(k, 0);
          for (std::size_t i = 0; i < d; ++i)
            if (c[i] != 0)
              for (std::size_t l = 0; l < k; ++l) v[l] = F.add(v[l], F.mul(c[i], s.rows[i][l]));
          vecs.push_back(std::move(v));
        }
        auto piv = detail::rref(F, vecs, k);
        covered += vecs.size();
        next.push_back({std::move(vecs), std::move(piv)});
      }
      if (covered != d) throw InternalError("character_degrees: class matrix is not diagonalizable");
    }
    spaces = std::move(next);
  }
  if (!all_split() || spaces.size() != k) {
    throw InternalError("character_degrees: eigenspace splitting incomplete");
  }

  const std::size_t id_class = cd.class_of[FiniteGroup::identity()];
  std::vector<std::size_t> inverse_class(k);
  for (std::size_t c = 0; c < k; ++c) inverse_class[c] = cd.class_of[g.inverse(cd.classes[c].representative)];
  const u64 root_bound = detail::isqrt(order);

  std::vector<u64> degrees;
  for (const Space& s : spaces) {
    std::vector<u64> w = s.rows.front();
    if (w[id_class] == 0) throw InternalError("character_degrees: eigenvector vanishes at the identity");
    const u64 norm = F.inv(w[id_class]);
    for (u64& x : w) x = F.mul(x, norm);
    u64 sum = 0;
    for (std::size_t c = 0; c < k; ++c) {
      sum = F.add(sum, F.mul(F.mul(w[c], w[inverse_class[c]]), F.inv(cd.classes[c].size % p)));
    }
    const u64 d2 = F.mul(order % p, F.inv(sum));
    u64 found = 0;
    for (u64 d = 1; d <= root_bound; ++d) {
      if (d * d % p == d2) {
        found = d;
        break;
      }
    }
    if (found == 0 || order % found != 0) throw InternalError("character_degrees: degree lift failed");
    degrees.push_back(found);
  }
  DegreeMultiset result(degrees);
  if (result.sum_of_squares() != order || result.count() != k || result.multiplicity(1) == 0) {
    throw InternalError("character_degrees: sum of squares check failed");
  }
  return result;
}

inline DegreeMultiset character_degrees(const FiniteGroup& g) { return character_degrees(g, conjugacy_classes(g)); }

}  // namespace cdg
