#pragma once

// Independent reference computations for the tests. Nothing here calls the
// library routine it is used to check.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "cdgraph/group.hpp"

namespace oracle {

using u64 = std::uint64_t;

inline std::vector<u64> trial_division_primes(u64 n) {
  std::vector<u64> out;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

inline bool is_prime_slow(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Multiplicative order of m modulo the prime q (q does not divide m).
inline u64 order_mod(u64 m, u64 q) {
  u64 x = m % q, k = 1;
  while (x != 1) {
    x = x * (m % q) % q;
    ++k;
  }
  return k;
}

// Simple graph on vertices 0..n-1 as adjacency sets.
struct SmallGraph {
  int n = 0;
  std::vector<std::set<int>> adj;
};

inline int count_components(const SmallGraph& g, int removed = -1) {
  std::vector<char> seen(static_cast<std::size_t>(g.n), 0);
  int comps = 0;
  for (int s = 0; s < g.n; ++s) {
    if (s == removed || seen[static_cast<std::size_t>(s)]) continue;
    ++comps;
    std::vector<int> stack{s};
    seen[static_cast<std::size_t>(s)] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : g.adj[static_cast<std::size_t>(u)]) {
        if (w == removed || seen[static_cast<std::size_t>(w)]) continue;
        seen[static_cast<std::size_t>(w)] = 1;
        stack.push_back(w);
      }
    }
  }
  return comps;
}

// Vertices whose deletion increases the number of components.
inline std::vector<int> brute_force_cut_vertices(const SmallGraph& g) {
  const int base = count_components(g);
  std::vector<int> out;
  for (int v = 0; v < g.n; ++v)
    if (count_components(g, v) > base) out.push_back(v);
  return out;
}

inline u64 commuting_count(const cdg::FiniteGroup& g, cdg::Index x) {
  u64 n = 0;
  for (cdg::Index y = 0; y < g.order(); ++y)
    if (g.multiply(x, y) == g.multiply(y, x)) ++n;
  return n;
}

// Classes by conjugating with every element; sizes ascending.
inline std::vector<u64> naive_class_sizes(const cdg::FiniteGroup& g) {
  std::vector<char> seen(g.order(), 0);
  std::vector<u64> sizes;
  for (cdg::Index x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    std::set<cdg::Index> cls;
    for (cdg::Index y = 0; y < g.order(); ++y) cls.insert(g.multiply(g.multiply(g.inverse(y), x), y));
    for (cdg::Index z : cls) seen[z] = 1;
    sizes.push_back(cls.size());
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

// |G : G'|. G' is the normal closure of the commutators [x, s], s a
// generator.
inline u64 abelianization_order(const cdg::FiniteGroup& g) {
  std::vector<char> in(g.order(), 0);
  std::vector<cdg::Index> elems{cdg::FiniteGroup::identity()};
  in[0] = 1;
  std::vector<cdg::Index> gens;
  for (cdg::Index x = 0; x < g.order(); ++x)
    for (cdg::Index y : g.generators()) {
      cdg::Index c = g.multiply(g.multiply(g.inverse(x), g.inverse(y)), g.multiply(x, y));
      if (!in[c]) {
        in[c] = 1;
        gens.push_back(c);
      }
    }
  std::fill(in.begin(), in.end(), 0);
  in[0] = 1;
  for (std::size_t h = 0; h < elems.size(); ++h)
    for (cdg::Index s : gens) {
      cdg::Index z = g.multiply(elems[h], s);
      if (!in[z]) {
        in[z] = 1;
        elems.push_back(z);
      }
    }
  bool grew = true;
  while (grew) {
    grew = false;
    const std::size_t n = elems.size();
    for (std::size_t i = 0; i < n; ++i)
      for (cdg::Index s : g.generators()) {
        cdg::Index z = g.multiply(g.multiply(g.inverse(s), elems[i]), s);
        if (!in[z]) {
          in[z] = 1;
          elems.push_back(z);
          grew = true;
        }
      }
    for (std::size_t h = 0; h < elems.size(); ++h)
      for (std::size_t k = 0; k < elems.size() && elems.size() < g.order(); ++k) {
        cdg::Index z = g.multiply(elems[h], elems[k]);
        if (!in[z]) {
          in[z] = 1;
          elems.push_back(z);
          grew = true;
        }
      }
  }
  return g.order() / elems.size();
}

// Number of sign vectors e in {+1,-1}^3 with e1 + e2 2^c + e3 2^(2c)
// divisible by 2^(2c) - 2^c + 1.
inline int triality_sign_vectors(unsigned c) {
  const long long ord = (1LL << (2 * c)) - (1LL << c) + 1;
  int count = 0;
  for (int mask = 0; mask < 8; ++mask) {
    long long s = 0;
    for (unsigned j = 0; j < 3; ++j) s += ((mask >> j) & 1 ? -1 : 1) * (1LL << (j * c));
    if (((s % ord) + ord) % ord == 0) ++count;
  }
  return count;
}

// Degrees of A5 from its character table, written out by hand:
// classes 1, (12)(34), (123), (12345), (13524).
inline std::vector<u64> a5_degrees_by_hand() { return {1, 3, 3, 4, 5}; }

// Closed-form degrees of SL2(2^a) from the classical table.
inline std::map<u64, u64> sl2_even_degrees(u64 q) { return {{1, 1}, {q - 1, q / 2}, {q, 1}, {q + 1, q / 2 - 1}}; }

inline std::mt19937_64 rng(std::uint64_t salt = 0) { return std::mt19937_64(0x5eed2024ULL ^ salt); }

}  // namespace oracle
