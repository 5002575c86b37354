#pragma once

#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "markov12/arc.hpp"
#include "markov12/laurent.hpp"
#include "markov12/rational.hpp"

namespace markov12 {

enum class Glue { Right, Up };

struct Tile {
  int south = 0, west = 0, north = 0, east = 0;
  int diagonal = 0;  // label of the removed diagonal

  friend bool operator==(const Tile&, const Tile&) = default;
};

struct GraphEdge {
  std::size_t u = 0, v = 0;  // vertex indices
  int label = 0;
};

// Tile j sits at a lattice cell; tile j+1 is attached to its east (Right) or
// north (Up) side. A graph with no tiles is the single edge of an initial arc.
class SnakeGraph {
 public:
  // Checks that glued sides carry equal labels; throws WrongShape otherwise.
  SnakeGraph(std::vector<Tile> tiles, std::vector<Glue> shape);
  static SnakeGraph single_edge(int label);

  std::size_t tile_count() const { return tiles_.size(); }
  bool is_single_edge() const { return tiles_.empty(); }
  int single_edge_label() const { return edge_label_; }
  const std::vector<Tile>& tiles() const { return tiles_; }
  const std::vector<Glue>& shape() const { return shape_; }
  std::string shape_word() const;  // e.g. "URRUR"

  // Lattice realisation. Vertices are listed tile by tile (south-west first),
  // edges tile by tile in south, west, north, east order, shared sides once.
  const std::vector<std::pair<long, long>>& vertices() const { return vertices_; }
  const std::vector<GraphEdge>& edges() const { return edges_; }
  // Edge indices of tile j's south, west, north and east sides.
  std::array<std::size_t, 4> tile_edges(std::size_t j) const { return tile_edges_[j]; }

 private:
  SnakeGraph() = default;
  void realise();

  std::vector<Tile> tiles_;
  std::vector<Glue> shape_;
  int edge_label_ = 0;
  std::vector<std::pair<long, long>> vertices_;
  std::vector<GraphEdge> edges_;
  std::vector<std::array<std::size_t, 4>> tile_edges_;
};

// Unfolds the triangles met by a valid arc into tiles; throws InvalidArc.
SnakeGraph build_snake_graph(const ArcDescriptor& arc);

// Sorted edge indices.
using PerfectMatching = std::vector<std::size_t>;
// Receives the edge indices of one matching in the order they were chosen.
using MatchingVisitor = std::function<void(std::span<const std::size_t>)>;

// Depth-first, always covering the lowest uncovered vertex.
void for_each_matching(const SnakeGraph& g, const MatchingVisitor& visit);
// Lexicographically sorted list of sorted matchings.
std::vector<PerfectMatching> enumerate_matchings(const SnakeGraph& g);
std::vector<PerfectMatching> enumerate_matchings_serial(const SnakeGraph& g);
Integer count_matchings_by_enumeration(const SnakeGraph& g);
Integer count_matchings_by_enumeration_serial(const SnakeGraph& g);

// Transfer recursion along the tiles, linear in the tile count.
Integer count_matchings(const SnakeGraph& g);
// Sum over perfect matchings of the product of x_label over matched edges.
LaurentPolynomial weight_polynomial(const SnakeGraph& g);
// Product of x_label over tile diagonals.
Monomial diagonal_monomial(const SnakeGraph& g);

// Each crossing of a pending arc contributes two tiles whose diagonals carry
// its label, so the diagonal monomial is cross^2. The cluster variable is
// weight / cross^2; numerator_polynomial is weight / cross, the numerator of
// the cluster variable over the denominator cross.
LaurentPolynomial numerator_polynomial(const ArcDescriptor& arc);
LaurentPolynomial cluster_variable_of_arc(const ArcDescriptor& arc);

enum class Sign { Minus = -1, Plus = 1 };
inline Sign flip(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }

using SignSequence = std::vector<Sign>;

// Per edge index. Tile j's south and east carry s_j, north and west -s_j, with
// s_1 = Minus and s_j alternating; a single edge gets Minus.
std::vector<Sign> sign_assignment(const SnakeGraph& g);
// Every tile: north = west, south = east, north = -south.
bool sign_rules_hold(const SnakeGraph& g, const std::vector<Sign>& signs);
// South edge of the first tile, each glued side in order, east edge of the last tile.
SignSequence sign_sequence(const SnakeGraph& g);
SignSequence sign_sequence(const SnakeGraph& g, const std::vector<Sign>& signs);

struct ContinuedFraction {
  std::vector<Integer> terms;

  friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;
};

ContinuedFraction run_lengths(const SignSequence& s);
ContinuedFraction continued_fraction(const SnakeGraph& g);
Rational evaluate_cf(const ContinuedFraction& cf);

struct MatchingCheck {
  bool ok = false;
  Integer cf_numerator;
  Integer matching_count;
  ContinuedFraction cf;
  std::string diagnostic;
};
MatchingCheck numerator_matching_check(const ArcDescriptor& arc);

}  // namespace markov12
