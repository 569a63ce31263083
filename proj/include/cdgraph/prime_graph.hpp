#pragma once

// Prime-labelled simple graphs: the character degree graph and the orbit
// graph. At most 64 vertices; adjacency is a row of bits per vertex.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cdgraph/chardeg.hpp"
#include "cdgraph/error.hpp"
#include "cdgraph/numtheory.hpp"

namespace cdg {

class PrimeGraph {
 public:
  static constexpr std::size_t kMaxVertices = 64;

  PrimeGraph() = default;

  PrimeGraph(PrimeSet vertices, const std::vector<std::pair<u64, u64>>& edges) : vertices_(std::move(vertices)) {
    if (vertices_.size() > kMaxVertices) throw InvalidArgument("PrimeGraph: too many vertices");
    adj_.assign(vertices_.size(), 0);
    for (auto [p, q] : edges) add_edge(p, q);
  }

  const PrimeSet& vertices() const noexcept { return vertices_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  bool has_vertex(u64 p) const { return vertices_.contains(p); }

  void add_edge(u64 p, u64 q) {
    if (p == q) throw InvalidArgument("PrimeGraph: loops are not allowed");
    const std::size_t i = position(p), j = position(q);
    adj_[i] |= bit(j);
    adj_[j] |= bit(i);
  }

  bool adjacent(u64 p, u64 q) const {
    if (!has_vertex(p) || !has_vertex(q) || p == q) return false;
    return (adj_[position(p)] & bit(position(q))) != 0;
  }

  // Ascending pairs (p < q), ascending lexicographically.
  std::vector<std::pair<u64, u64>> edges() const {
    std::vector<std::pair<u64, u64>> out;
    for (std::size_t i = 0; i < adj_.size(); ++i)
      for (std::size_t j = i + 1; j < adj_.size(); ++j)
        if (adj_[i] & bit(j)) out.emplace_back(vertices_.values()[i], vertices_.values()[j]);
    return out;
  }

  std::size_t degree(u64 p) const { return static_cast<std::size_t>(std::popcount(adj_[position(p)])); }

  // Bit rows in vertex order; used by the graph algorithms below.
  const std::vector<std::uint64_t>& rows() const noexcept { return adj_; }

  PrimeGraph without(u64 p) const {
    std::vector<u64> keep;
    for (u64 v : vertices_)
      if (v != p) keep.push_back(v);
    std::vector<std::pair<u64, u64>> es;
    for (auto e : edges())
      if (e.first != p && e.second != p) es.push_back(e);
    return PrimeGraph(PrimeSet(std::move(keep)), es);
  }

  friend bool operator==(const PrimeGraph& a, const PrimeGraph& b) {
    return a.vertices_ == b.vertices_ && a.adj_ == b.adj_;
  }

  std::string to_string() const {
    std::ostringstream os;
    os << "vertices " << vertices_ << " edges {";
    bool first = true;
    for (auto [p, q] : edges()) {
      os << (first ? "" : ",") << p << '-' << q;
      first = false;
    }
    os << '}';
    return os.str();
  }

 private:
  static std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << i; }

  std::size_t position(u64 p) const {
    const auto& v = vertices_.values();
    auto it = std::lower_bound(v.begin(), v.end(), p);
    if (it == v.end() || *it != p) throw InvalidArgument("PrimeGraph: " + std::to_string(p) + " is not a vertex");
    return static_cast<std::size_t>(it - v.begin());
  }

  PrimeSet vertices_;
  std::vector<std::uint64_t> adj_;
};

inline bool graph_equals(const PrimeGraph& a, const PrimeGraph& b) { return a == b; }

// Graph on the primes dividing the given numbers; p ~ q iff pq divides one
// of them.
inline PrimeGraph graph_from_numbers(const std::vector<u64>& numbers) {
  std::vector<u64> all;
  std::vector<PrimeSet> sets;
  for (u64 n : numbers) {
    sets.push_back(prime_set(n));
    all.insert(all.end(), sets.back().begin(), sets.back().end());
  }
  PrimeGraph g(PrimeSet(std::move(all)), {});
  for (const PrimeSet& s : sets)
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j) g.add_edge(s.values()[i], s.values()[j]);
  return g;
}

inline PrimeGraph degree_graph(const DegreeMultiset& degrees) { return graph_from_numbers(degrees.degree_set()); }

// Components, each ascending, ordered by least vertex.
inline std::vector<PrimeSet> connected_components(const PrimeGraph& g) {
  const auto& rows = g.rows();
  const auto& v = g.vertices().values();
  std::vector<PrimeSet> out;
  std::uint64_t seen = 0;
  for (std::size_t s = 0; s < v.size(); ++s) {
    if (seen & (std::uint64_t{1} << s)) continue;
    std::uint64_t comp = std::uint64_t{1} << s, frontier = comp;
    while (frontier != 0) {
      std::uint64_t next = 0;
      for (std::uint64_t f = frontier; f != 0; f &= f - 1) next |= rows[static_cast<std::size_t>(std::countr_zero(f))];
      frontier = next & ~comp;
      comp |= next;
    }
    seen |= comp;
    std::vector<u64> members;
    for (std::uint64_t c = comp; c != 0; c &= c - 1) members.push_back(v[static_cast<std::size_t>(std::countr_zero(c))]);
    out.emplace_back(std::move(members));
  }
  return out;
}

inline bool is_connected(const PrimeGraph& g) { return connected_components(g).size() <= 1; }

// Articulation vertices by depth-first low-link.
inline PrimeSet cut_vertices(const PrimeGraph& g) {
  const auto& rows = g.rows();
  const std::size_t n = rows.size();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<char> cut(n, 0);
  int timer = 0;
  std::function<void(std::size_t, int)> dfs = [&](std::size_t u, int parent) {
    disc[u] = low[u] = timer++;
    int children = 0;
    for (std::uint64_t nb = rows[u]; nb != 0; nb &= nb - 1) {
      const auto w = static_cast<std::size_t>(std::countr_zero(nb));
      if (static_cast<int>(w) == parent) continue;
      if (disc[w] >= 0) {
        low[u] = std::min(low[u], disc[w]);
        continue;
      }
      ++children;
      dfs(w, static_cast<int>(u));
      low[u] = std::min(low[u], low[w]);
      if (parent >= 0 && low[w] >= disc[u]) cut[u] = 1;
    }
    if (parent < 0 && children > 1) cut[u] = 1;
  };
  for (std::size_t u = 0; u < n; ++u)
    if (disc[u] < 0) dfs(u, -1);
  std::vector<u64> out;
  for (std::size_t u = 0; u < n; ++u)
    if (cut[u]) out.push_back(g.vertices().values()[u]);
  return PrimeSet(std::move(out));
}

inline PrimeSet complete_vertices(const PrimeGraph& g) {
  std::vector<u64> out;
  for (u64 p : g.vertices())
    if (g.degree(p) + 1 == g.vertex_count()) out.push_back(p);
  return PrimeSet(std::move(out));
}

inline bool is_clique(const PrimeGraph& g, const PrimeSet& subset) {
  if (!subset.is_subset_of(g.vertices())) throw InvalidArgument("is_clique: subset is not contained in the vertex set");
  const auto& s = subset.values();
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!g.adjacent(s[i], s[j])) return false;
  return true;
}

inline std::string to_dot(const PrimeGraph& g) {
  std::ostringstream os;
  os << "graph G {\n";
  for (u64 p : g.vertices()) os << "  " << p << " [label=\"" << p << "\"];\n";
  for (auto [p, q] : g.edges()) os << "  " << p << " -- " << q << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace cdg
