#pragma once

// Conjugacy classes by breadth-first orbits under conjugation by the
// generators, ordered by (size, least member code).

#include <algorithm>
#include <cstdint>
#include <vector>

#include "cdgraph/error.hpp"
#include "cdgraph/group.hpp"

namespace cdg {

struct ConjClass {
  Index representative;         // member with least code
  std::size_t size;
  std::vector<Index> members;   // ascending code order
};

struct ClassData {
  std::vector<ConjClass> classes;
  std::vector<std::uint32_t> class_of;  // element index -> class position

  std::size_t count() const noexcept { return classes.size(); }
  const ConjClass& of(Index x) const { return classes.at(class_of.at(x)); }
};

namespace detail {

inline std::vector<Index> conjugation_orbit(const FiniteGroup& g, Index x, std::vector<char>& seen) {
  std::vector<Index> orbit{x};
  seen[x] = 1;
  std::vector<Index> gen_inv;
  for (Index s : g.generators()) gen_inv.push_back(g.inverse(s));
  const auto& gens = g.generators();
  for (std::size_t head = 0; head < orbit.size(); ++head) {
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const Index y = g.multiply(g.multiply(gen_inv[k], orbit[head]), gens[k]);
      if (!seen[y]) {
        seen[y] = 1;
        orbit.push_back(y);
      }
    }
  }
  return orbit;
}

}  // namespace detail

inline ClassData conjugacy_classes(const FiniteGroup& g) {
  std::vector<char> seen(g.order(), 0);
  std::vector<ConjClass> classes;
  for (Index x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    auto orbit = detail::conjugation_orbit(g, x, seen);
    std::sort(orbit.begin(), orbit.end(), [&](Index a, Index b) { return g.code(a) < g.code(b); });
    classes.push_back(ConjClass{orbit.front(), orbit.size(), std::move(orbit)});
  }
  std::sort(classes.begin(), classes.end(), [&](const ConjClass& a, const ConjClass& b) {
    if (a.size != b.size) return a.size < b.size;
    return g.code(a.representative) < g.code(b.representative);
  });
  ClassData data;
  data.class_of.assign(g.order(), 0);
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (Index x : classes[c].members) data.class_of[x] = static_cast<std::uint32_t>(c);
  data.classes = std::move(classes);
  return data;
}

inline u64 centralizer_order(const FiniteGroup& g, Index x) {
  if (!g.contains(x)) throw InvalidArgument("centralizer_order: element not in group");
  std::vector<char> seen(g.order(), 0);
  return g.order() / detail::conjugation_orbit(g, x, seen).size();
}

}  // namespace cdg
