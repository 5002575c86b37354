#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "markov12/cluster.hpp"
#include "markov12/snake_graph.hpp"
#include "markov12/solution_tree.hpp"

namespace markov12 {

using Json = nlohmann::ordered_json;

// {"triple":["1","13","3"],"depth":2,"path":[3,2]}
Json node_to_json(const TreeNode& node);
TreeNode node_from_json(const Json& j);

// {"nvars":3,"terms":[{"exp":[4,0,0],"coef":"1"}, ...]}, terms in canonical order.
Json polynomial_to_json(const LaurentPolynomial& p);
LaurentPolynomial polynomial_from_json(const Json& j);

// {"matrix":[[0,2,-2],...],"diagonal":[1,1,1],"cluster":["x1","x2","x3"]}
Json seed_to_json(const Seed& s);
Seed seed_from_json(const Json& j);

// {"tile_count":6,"shape":"URRUR","tiles":[{"S":1,"W":3,"N":2,"E":1,"diag":3}, ...]};
// a single edge is {"tile_count":0,"shape":"","edge":2}.
Json snake_to_json(const SnakeGraph& g);
SnakeGraph snake_from_json(const Json& j);

// Parses text and re-dumps it; throws ParseError on malformed JSON.
Json parse_json(const std::string& text);

// Parent edges follow path prefixes; nodes whose parent is absent are roots.
std::string tree_to_dot(const std::vector<TreeNode>& nodes);
// Lattice drawing with edge labels; edges of `highlight` are drawn bold red.
std::string snake_to_dot(const SnakeGraph& g, const std::optional<PerfectMatching>& highlight = std::nullopt);

}  // namespace markov12
