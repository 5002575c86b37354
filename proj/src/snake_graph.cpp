#include "markov12/snake_graph.hpp"

#include <map>
#include <optional>

#include "markov12/errors.hpp"

namespace markov12 {

SnakeGraph::SnakeGraph(std::vector<Tile> tiles, std::vector<Glue> shape)
    : tiles_(std::move(tiles)), shape_(std::move(shape)) {
  if (tiles_.empty()) throw WrongShape("a snake graph needs at least one tile");
  if (shape_.size() + 1 != tiles_.size()) throw WrongShape("shape must have one glue per adjacent tile pair");
  for (std::size_t j = 0; j + 1 < tiles_.size(); ++j) {
    const Tile& a = tiles_[j];
    const Tile& b = tiles_[j + 1];
    const bool ok = shape_[j] == Glue::Right ? a.east == b.west : a.north == b.south;
    if (!ok) throw WrongShape("glued sides of tiles " + std::to_string(j + 1) + " and " +
                              std::to_string(j + 2) + " carry different labels");
  }
  realise();
}

SnakeGraph SnakeGraph::single_edge(int label) {
  SnakeGraph g;
  g.edge_label_ = label;
  g.vertices_ = {{0, 0}, {1, 0}};
  g.edges_ = {{0, 1, label}};
  return g;
}

std::string SnakeGraph::shape_word() const {
  std::string s;
  for (Glue d : shape_) s += d == Glue::Up ? 'U' : 'R';
  return s;
}

void SnakeGraph::realise() {
  std::map<std::pair<long, long>, std::size_t> vindex;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> eindex;
  auto vertex = [&](long x, long y) {
    auto [it, fresh] = vindex.try_emplace({x, y}, vertices_.size());
    if (fresh) vertices_.push_back({x, y});
    return it->second;
  };
  auto edge = [&](std::size_t u, std::size_t v, int label) {
    auto [it, fresh] = eindex.try_emplace({u, v}, edges_.size());
    if (fresh) edges_.push_back({u, v, label});
    else if (edges_[it->second].label != label) throw InternalInconsistency("shared side with two labels");
    return it->second;
  };

  long x = 0, y = 0;
  for (std::size_t j = 0; j < tiles_.size(); ++j) {
    if (j > 0) (shape_[j - 1] == Glue::Up ? y : x) += 1;
    const std::size_t sw = vertex(x, y), se = vertex(x + 1, y);
    const std::size_t nw = vertex(x, y + 1), ne = vertex(x + 1, y + 1);
    const Tile& t = tiles_[j];
    const std::size_t s = edge(sw, se, t.south);
    const std::size_t w = edge(sw, nw, t.west);
    const std::size_t n = edge(nw, ne, t.north);
    const std::size_t e = edge(se, ne, t.east);
    tile_edges_.push_back({s, w, n, e});
  }
}

namespace {

// A triangle of the unfolded strip: labels of sides 0..2 in counterclockwise
// order, and the sides through which the arc enters and leaves.
struct StripTriangle {
  std::array<int, 3> labels;
  std::optional<int> in, out;
};

std::vector<StripTriangle> strip_triangles(const ArcDescriptor& arc) {
  std::vector<StripTriangle> tris;
  std::optional<int> prev;
  for (const auto& x : arc.crossings) {
    tris.push_back({{1, 2, 3}, prev ? std::optional<int>(*prev - 1) : std::nullopt, x.label - 1});
    tris.push_back({{x.label, x.label, x.label}, 0, x.passage == Passage::Clockwise ? 1 : 2});
    prev = x.label;
  }
  tris.push_back({{1, 2, 3}, *prev - 1, std::nullopt});
  return tris;
}

}  // namespace

SnakeGraph build_snake_graph(const ArcDescriptor& arc) {
  if (arc.is_initial()) {
    if (arc.initial_label < 1 || arc.initial_label > 3) throw InvalidArc("initial arc label out of range");
    return SnakeGraph::single_edge(arc.initial_label);
  }
  validate_arc(arc);
  const auto tris = strip_triangles(arc);
  const std::size_t d = tris.size() - 1;
  std::vector<Tile> tiles;
  std::vector<Glue> shape;
  for (std::size_t j = 0; j < d; ++j) {
    // Tile orientation alternates, the first tile being reflected.
    const bool positive = j % 2 == 1;
    const StripTriangle& a = tris[j];
    const StripTriangle& b = tris[j + 1];
    Tile t;
    const int o = *a.out;
    int p = a.labels[(o + 1) % 3], q = a.labels[(o + 2) % 3];
    t.west = positive ? p : q;
    t.south = positive ? q : p;
    const int i = *b.in;
    p = b.labels[(i + 1) % 3];
    q = b.labels[(i + 2) % 3];
    t.east = positive ? p : q;
    t.north = positive ? q : p;
    t.diagonal = a.labels[o];
    tiles.push_back(t);
    if (j + 1 < d) {
      const bool follows = *b.out == (i + 1) % 3;
      shape.push_back(follows == positive ? Glue::Up : Glue::Right);
    }
  }
  return SnakeGraph(std::move(tiles), std::move(shape));
}

Monomial diagonal_monomial(const SnakeGraph& g) {
  Monomial m(3);
  for (const Tile& t : g.tiles()) m[static_cast<std::size_t>(t.diagonal - 1)] += 1;
  return m;
}

}  // namespace markov12
