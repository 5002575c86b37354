#include <algorithm>
#include <iterator>

#include <omp.h>

#include "markov12/errors.hpp"
#include "markov12/parallel.hpp"
#include "markov12/snake_graph.hpp"

namespace markov12 {
namespace {

struct Adjacency {
  // incident[v]: (edge index, other endpoint), edges in increasing index order.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> incident;
};

Adjacency adjacency(const SnakeGraph& g) {
  Adjacency a;
  a.incident.resize(g.vertices().size());
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    const auto& edge = g.edges()[e];
    a.incident[edge.u].push_back({e, edge.v});
    a.incident[edge.v].push_back({e, edge.u});
  }
  for (auto& list : a.incident) std::sort(list.begin(), list.end());
  return a;
}

struct SearchState {
  std::vector<char> covered;
  std::vector<std::size_t> chosen;
  std::size_t next = 0;  // every vertex below `next` is covered
};

// Walks the search tree below `st`. At `split_depth` chosen edges the state is
// handed to `emit` instead of being expanded further.
template <class Leaf, class Emit>
void search(const Adjacency& adj, SearchState& st, std::size_t split_depth, Leaf& leaf, Emit& emit) {
  const std::size_t n = st.covered.size();
  std::size_t v = st.next;
  while (v < n && st.covered[v]) ++v;
  if (v == n) {
    leaf(std::span<const std::size_t>(st.chosen));
    return;
  }
  if (st.chosen.size() == split_depth) {
    emit(st);
    return;
  }
  const std::size_t saved = st.next;
  st.next = v;
  st.covered[v] = 1;
  for (const auto& [e, w] : adj.incident[v]) {
    if (st.covered[w]) continue;
    st.covered[w] = 1;
    st.chosen.push_back(e);
    search(adj, st, split_depth, leaf, emit);
    st.chosen.pop_back();
    st.covered[w] = 0;
  }
  st.covered[v] = 0;
  st.next = saved;
}

constexpr std::size_t kNoSplit = static_cast<std::size_t>(-1);

SearchState start_state(const SnakeGraph& g) {
  SearchState st;
  st.covered.assign(g.vertices().size(), 0);
  return st;
}

// Prefix states covering the whole search tree, in serial visiting order.
// Split depths stay below |V|/2, so no matching completes before its split.
std::vector<SearchState> frontier(const Adjacency& adj, const SnakeGraph& g, std::size_t want) {
  std::vector<SearchState> states;
  auto emit = [&](const SearchState& s) { states.push_back(s); };
  auto leaf = [](std::span<const std::size_t>) {};
  for (std::size_t depth = 0; depth < g.vertices().size() / 2; ++depth) {
    states.clear();
    SearchState st = start_state(g);
    search(adj, st, depth, leaf, emit);
    if (states.size() >= want) break;
  }
  return states;
}

}  // namespace

void for_each_matching(const SnakeGraph& g, const MatchingVisitor& visit) {
  const Adjacency adj = adjacency(g);
  SearchState st = start_state(g);
  auto never = [](const SearchState&) {};
  search(adj, st, kNoSplit, visit, never);
}

std::vector<PerfectMatching> enumerate_matchings_serial(const SnakeGraph& g) {
  std::vector<PerfectMatching> out;
  for_each_matching(g, [&](std::span<const std::size_t> m) {
    PerfectMatching pm(m.begin(), m.end());
    std::sort(pm.begin(), pm.end());
    out.push_back(std::move(pm));
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PerfectMatching> enumerate_matchings(const SnakeGraph& g) {
  const int threads = thread_budget();
  if (threads <= 1) return enumerate_matchings_serial(g);
  const Adjacency adj = adjacency(g);
  std::vector<SearchState> roots = frontier(adj, g, 8 * static_cast<std::size_t>(threads));
  std::vector<std::vector<PerfectMatching>> parts(roots.size());
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (std::size_t r = 0; r < roots.size(); ++r) {
    auto leaf = [&](std::span<const std::size_t> m) {
      PerfectMatching pm(m.begin(), m.end());
      std::sort(pm.begin(), pm.end());
      parts[r].push_back(std::move(pm));
    };
    auto never = [](const SearchState&) {};
    search(adj, roots[r], kNoSplit, leaf, never);
  }
  std::vector<PerfectMatching> out;
  for (auto& p : parts) std::move(p.begin(), p.end(), std::back_inserter(out));
  std::sort(out.begin(), out.end());
  return out;
}

Integer count_matchings_by_enumeration_serial(const SnakeGraph& g) {
  std::uint64_t n = 0;
  for_each_matching(g, [&](std::span<const std::size_t>) { ++n; });
  return Integer(static_cast<unsigned long>(n));
}

Integer count_matchings_by_enumeration(const SnakeGraph& g) {
  const int threads = thread_budget();
  if (threads <= 1) return count_matchings_by_enumeration_serial(g);
  const Adjacency adj = adjacency(g);
  std::vector<SearchState> roots = frontier(adj, g, 8 * static_cast<std::size_t>(threads));
  unsigned long total = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : total) num_threads(threads)
  for (std::size_t r = 0; r < roots.size(); ++r) {
    unsigned long local = 0;
    auto leaf = [&](std::span<const std::size_t>) { ++local; };
    auto never = [](const SearchState&) {};
    search(adj, roots[r], kNoSplit, leaf, never);
    total += local;
  }
  return Integer(total);
}

namespace {

enum class Entry { South, West };

// Two-state transfer along the tiles; `weigh(v, label)` multiplies v by the
// weight of an edge with that label.
template <class T, class Weigh>
T transfer(const SnakeGraph& g, T one, Weigh weigh) {
  const auto& tiles = g.tiles();
  const auto& shape = g.shape();
  T a = weigh(one, tiles[0].south);
  T b = one;
  Entry entry = Entry::South;
  for (std::size_t j = 0; j < tiles.size(); ++j) {
    const Tile& t = tiles[j];
    const bool south = entry == Entry::South;
    const int across = south ? t.north : t.east;
    const int side1 = south ? t.west : t.south;
    const int side2 = south ? t.east : t.north;
    T next_a = weigh(a, across) + weigh(weigh(b, side1), side2);
    if (j + 1 == tiles.size()) return next_a;
    const Glue glue = shape[j];
    T next_b;
    if (south && glue == Glue::Up) next_b = a;
    else if (!south && glue == Glue::Right) next_b = a;
    else if (south) next_b = weigh(b, t.west);
    else next_b = weigh(b, t.south);
    a = std::move(next_a);
    b = std::move(next_b);
    entry = glue == Glue::Up ? Entry::South : Entry::West;
  }
  throw InternalInconsistency("transfer over an empty snake graph");
}

}  // namespace

Integer count_matchings(const SnakeGraph& g) {
  if (g.is_single_edge()) return 1;
  return transfer<Integer>(g, Integer(1), [](const Integer& v, int) { return v; });
}

LaurentPolynomial weight_polynomial(const SnakeGraph& g) {
  if (g.is_single_edge()) {
    return LaurentPolynomial::variable(3, static_cast<std::size_t>(g.single_edge_label() - 1));
  }
  return transfer<LaurentPolynomial>(
      g, LaurentPolynomial::constant(3, 1), [](const LaurentPolynomial& p, int label) {
        return lp_mul_monomial(p, Monomial::variable(3, static_cast<std::size_t>(label - 1)));
      });
}

LaurentPolynomial numerator_polynomial(const ArcDescriptor& arc) {
  const SnakeGraph g = build_snake_graph(arc);
  if (g.is_single_edge()) return weight_polynomial(g);
  return lp_mul_monomial(weight_polynomial(g), cross_monomial(arc).inverse());
}

LaurentPolynomial cluster_variable_of_arc(const ArcDescriptor& arc) {
  const SnakeGraph g = build_snake_graph(arc);
  if (g.is_single_edge()) return weight_polynomial(g);
  return lp_mul_monomial(weight_polynomial(g), diagonal_monomial(g).inverse());
}

}  // namespace markov12
