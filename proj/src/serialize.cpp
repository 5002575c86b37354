#include "markov12/serialize.hpp"

#include <map>
#include <sstream>

#include "markov12/errors.hpp"

namespace markov12 {
namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

Integer integer_from_string_field(const Json& j) {
  if (!j.is_string()) throw ParseError("big integers are encoded as decimal strings");
  return parse_integer(j.get<std::string>());
}

long small_integer(const Integer& z) {
  if (!z.fits_slong_p()) throw WrongShape("entry " + to_string(z) + " is too large for a JSON number");
  return z.get_si();
}

Integer integer_from_number(const Json& j) {
  if (!j.is_number_integer()) throw ParseError("expected an integer");
  return Integer(j.get<long>());
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

Json node_to_json(const TreeNode& node) {
  Json j;
  j["triple"] = Json::array({to_string(node.triple.a), to_string(node.triple.b), to_string(node.triple.c)});
  j["depth"] = node.depth;
  j["path"] = node.path;
  return j;
}

TreeNode node_from_json(const Json& j) {
  try {
    const Json& t = field(j, "triple");
    if (!t.is_array() || t.size() != 3) throw ParseError("triple must have three components");
    TreeNode node;
    node.triple = {integer_from_string_field(t[0]), integer_from_string_field(t[1]),
                   integer_from_string_field(t[2])};
    node.depth = field(j, "depth").get<int>();
    node.path = field(j, "path").get<MutationWord>();
    return node;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad node record: ") + e.what());
  }
}

Json polynomial_to_json(const LaurentPolynomial& p) {
  Json terms = Json::array();
  for (std::size_t i = 0; i < p.term_count(); ++i) {
    const auto e = p.exponents(i);
    terms.push_back({{"exp", std::vector<std::int64_t>(e.begin(), e.end())}, {"coef", to_string(p.coefficient(i))}});
  }
  return {{"nvars", p.nvars()}, {"terms", std::move(terms)}};
}

LaurentPolynomial polynomial_from_json(const Json& j) {
  try {
    const auto n = field(j, "nvars").get<std::size_t>();
    std::vector<std::pair<Monomial, Integer>> terms;
    for (const auto& t : field(j, "terms")) {
      auto e = field(t, "exp").get<std::vector<std::int64_t>>();
      if (e.size() != n) throw VariableCountMismatch("exponent vector length differs from nvars");
      terms.emplace_back(Monomial(std::move(e)), integer_from_string_field(field(t, "coef")));
    }
    return LaurentPolynomial::from_terms(n, std::move(terms));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad polynomial record: ") + e.what());
  }
}

Json seed_to_json(const Seed& s) {
  Json matrix = Json::array();
  for (const auto& row : s.matrix.rows()) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(small_integer(x));
    matrix.push_back(std::move(r));
  }
  Json diagonal = Json::array();
  for (const auto& d : s.diagonal.values()) diagonal.push_back(small_integer(d));
  Json cluster = Json::array();
  for (const auto& x : s.cluster) cluster.push_back(to_text(x));
  return {{"matrix", std::move(matrix)}, {"diagonal", std::move(diagonal)}, {"cluster", std::move(cluster)}};
}

Seed seed_from_json(const Json& j) {
  try {
    std::vector<std::vector<Integer>> rows;
    for (const auto& r : field(j, "matrix")) {
      std::vector<Integer> row;
      for (const auto& x : r) row.push_back(integer_from_number(x));
      rows.push_back(std::move(row));
    }
    std::vector<Integer> diag;
    for (const auto& d : field(j, "diagonal")) diag.push_back(integer_from_number(d));
    ExchangeMatrix m(std::move(rows));
    const std::size_t n = m.size();
    std::vector<LaurentPolynomial> cluster;
    for (const auto& x : field(j, "cluster")) cluster.push_back(parse_polynomial(x.get<std::string>(), n));
    if (cluster.size() != n) throw WrongShape("cluster size differs from matrix size");
    MutationDiagonal d(std::move(diag));
    if (d.size() != n) throw WrongShape("diagonal size differs from matrix size");
    return Seed{std::move(cluster), std::move(m), std::move(d)};
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad seed record: ") + e.what());
  }
}

Json snake_to_json(const SnakeGraph& g) {
  Json j;
  j["tile_count"] = g.tile_count();
  j["shape"] = g.shape_word();
  if (g.is_single_edge()) {
    j["edge"] = g.single_edge_label();
    return j;
  }
  Json tiles = Json::array();
  for (const Tile& t : g.tiles()) {
    tiles.push_back({{"S", t.south}, {"W", t.west}, {"N", t.north}, {"E", t.east}, {"diag", t.diagonal}});
  }
  j["tiles"] = std::move(tiles);
  return j;
}

SnakeGraph snake_from_json(const Json& j) {
  try {
    const auto count = field(j, "tile_count").get<std::size_t>();
    const auto word = field(j, "shape").get<std::string>();
    if (count == 0) return SnakeGraph::single_edge(field(j, "edge").get<int>());
    std::vector<Glue> shape;
    for (char c : word) {
      if (c != 'U' && c != 'R') throw ParseError("shape letters are U and R");
      shape.push_back(c == 'U' ? Glue::Up : Glue::Right);
    }
    std::vector<Tile> tiles;
    for (const auto& t : field(j, "tiles")) {
      tiles.push_back({field(t, "S").get<int>(), field(t, "W").get<int>(), field(t, "N").get<int>(),
                       field(t, "E").get<int>(), field(t, "diag").get<int>()});
    }
    if (tiles.size() != count) throw WrongShape("tile_count differs from the number of tiles");
    return SnakeGraph(std::move(tiles), std::move(shape));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad snake graph record: ") + e.what());
  }
}

std::string tree_to_dot(const std::vector<TreeNode>& nodes) {
  std::map<MutationWord, std::size_t> index;
  for (std::size_t i = 0; i < nodes.size(); ++i) index.emplace(nodes[i].path, i);
  std::ostringstream out;
  out << "digraph tree {\n  node [shape=plaintext];\n";
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    out << "  n" << i << " [label=\"" << nodes[i].triple.str() << "\"];\n";
  }
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const auto& path = nodes[i].path;
    if (path.empty()) continue;
    const auto parent = index.find(MutationWord(path.begin(), path.end() - 1));
    if (parent == index.end()) continue;
    out << "  n" << parent->second << " -> n" << i << " [label=\"" << path.back() << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string snake_to_dot(const SnakeGraph& g, const std::optional<PerfectMatching>& highlight) {
  std::vector<char> marked(g.edges().size(), 0);
  if (highlight) {
    for (auto e : *highlight) {
      if (e >= marked.size()) throw IndexOutOfRange("matching edge index out of range");
      marked[e] = 1;
    }
  }
  std::ostringstream out;
  out << "graph snake {\n  node [shape=point];\n";
  for (std::size_t v = 0; v < g.vertices().size(); ++v) {
    out << "  v" << v << " [pos=\"" << g.vertices()[v].first << ',' << g.vertices()[v].second << "!\"];\n";
  }
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    const auto& edge = g.edges()[e];
    out << "  v" << edge.u << " -- v" << edge.v << " [label=\"x" << edge.label << '"';
    if (marked[e]) out << ", color=red, penwidth=3";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace markov12
