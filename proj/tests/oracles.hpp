#pragma once

// Reference implementations that share no code with the library.

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "markov12/snake_graph.hpp"
#include "markov12/solution_tree.hpp"

namespace oracle {

using Sorted = std::array<std::int64_t, 3>;

inline bool satisfies(markov12::EquationKind kind, std::int64_t x, std::int64_t y, std::int64_t z) {
  if (kind == markov12::EquationKind::Twelve) {
    return (x + y) * (x + y) + (y + z) * (y + z) + (z + x) * (z + x) == 12 * x * y * z;
  }
  return x * x + y * y + z * z == 3 * x * y * z;
}

// Every solution with 1 <= x <= y <= z <= limit, by exhaustive scan.
inline std::set<Sorted> scan(markov12::EquationKind kind, std::int64_t limit) {
  std::set<Sorted> out;
  for (std::int64_t x = 1; x <= limit; ++x) {
    for (std::int64_t y = x; y <= limit; ++y) {
      for (std::int64_t z = y; z <= limit; ++z) {
        if (satisfies(kind, x, y, z)) out.insert({x, y, z});
      }
    }
  }
  return out;
}

// Perfect matchings as sets of edge indices, by choosing |V|/2 edges among all
// subsets in increasing index order and keeping the vertex-disjoint covers.
inline std::vector<std::vector<std::size_t>> matchings(const markov12::SnakeGraph& g) {
  const std::size_t nv = g.vertices().size();
  const std::size_t ne = g.edges().size();
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> pick;
  std::vector<int> used(nv, 0);
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (pick.size() * 2 == nv) {
      out.push_back(pick);
      return;
    }
    for (std::size_t e = from; e < ne; ++e) {
      const auto& edge = g.edges()[e];
      if (used[edge.u] || used[edge.v]) continue;
      used[edge.u] = used[edge.v] = 1;
      pick.push_back(e);
      self(self, e + 1);
      pick.pop_back();
      used[edge.u] = used[edge.v] = 0;
    }
  };
  rec(rec, 0);
  return out;
}

// Weight polynomial as exponent-vector -> coefficient, summed matching by matching.
inline std::map<std::vector<std::int64_t>, long> weights(const markov12::SnakeGraph& g) {
  std::map<std::vector<std::int64_t>, long> out;
  for (const auto& m : matchings(g)) {
    std::vector<std::int64_t> e(3, 0);
    for (auto i : m) e[static_cast<std::size_t>(g.edges()[i].label - 1)] += 1;
    out[e] += 1;
  }
  return out;
}

}  // namespace oracle
