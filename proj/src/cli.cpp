#include "markov12/cli.hpp"

#include <CLI11.hpp>

#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include "markov12/cluster.hpp"
#include "markov12/crosscheck.hpp"
#include "markov12/errors.hpp"
#include "markov12/serialize.hpp"
#include "markov12/snake_graph.hpp"
#include "markov12/solution_tree.hpp"

namespace markov12 {
namespace {

constexpr int kMaxCrosscheckDepth = 6;

struct Options {
  std::string kind = "twelve";
  int depth = 3;
  std::string max_value;
  std::string word;
  std::string format = "table";
  std::string arc;
  std::vector<std::string> triple;
  int highlight = -1;
  bool inject_fault = false;
};

// Splits on whitespace, commas and parentheses.
std::vector<std::string> tokens_of(const std::string& line) {
  std::string cleaned = line;
  for (char& c : cleaned) {
    if (c == ',' || c == '(' || c == ')') c = ' ';
  }
  std::istringstream in(cleaned);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

Triple triple_of(const std::vector<std::string>& tokens) {
  if (tokens.size() != 3) throw ParseError("expected three integers");
  return {parse_integer(tokens[0]), parse_integer(tokens[1]), parse_integer(tokens[2])};
}

MutationWord word_of(const std::string& text) {
  MutationWord w;
  for (const auto& t : tokens_of(text)) {
    if (t.size() != 1 || t[0] < '1' || t[0] > '3') throw ParseError("mutation word entries must be 1, 2 or 3");
    w.push_back(t[0] - '0');
  }
  return w;
}

std::string word_text(const MutationWord& w) {
  std::string s = "[";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s + "]";
}

template <class T>
std::string triple_text(const std::array<T, 3>& v) {
  std::ostringstream s;
  s << '(' << v[0] << ',' << v[1] << ',' << v[2] << ')';
  return s.str();
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (format == a) return;
  }
  throw ParseError("unsupported --format '" + format + "' for this command");
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  require_format(o.format, {"table", "json", "dot"});
  if (o.depth < 0) throw ParseError("--depth must be nonnegative");
  std::optional<Integer> max_value;
  if (!o.max_value.empty()) max_value = parse_integer(o.max_value);
  const auto nodes = enumerate(parse_kind(o.kind), o.depth, max_value);
  if (o.format == "dot") {
    out << tree_to_dot(nodes);
  } else {
    for (const auto& n : nodes) out << (o.format == "json" ? node_to_json(n).dump() : n.triple.str()) << '\n';
  }
  return kExitOk;
}

int cmd_verify(const Options& o, std::istream& in, std::ostream& out) {
  const EquationKind kind = parse_kind(o.kind);
  std::vector<Triple> triples;
  for (std::string line; std::getline(in, line);) {
    const auto tokens = tokens_of(line);
    if (!tokens.empty()) triples.push_back(triple_of(tokens));
  }
  bool all = true;
  for (const auto& t : triples) {
    const bool ok = verify(t, kind);
    all = all && ok;
    out << (ok ? "PASS " : "FAIL ") << t.str() << '\n';
  }
  return all ? kExitOk : kExitFailure;
}

int cmd_mutate(const Options& o, std::ostream& out) {
  require_format(o.format, {"table", "json"});
  const MutationWord word = word_of(o.word);
  const Seed seed = apply_word(initial_seed(parse_kind(o.kind)), word);
  const auto values = specialize_ones(seed);
  if (o.format == "json") {
    Json j = seed_to_json(seed);
    j["specialization"] = Json::array({values[0].str(), values[1].str(), values[2].str()});
    out << j.dump() << '\n';
    return kExitOk;
  }
  out << "word " << word_text(word) << '\n';
  for (std::size_t i = 0; i < seed.cluster.size(); ++i) out << "x" << i + 1 << "' = " << to_text(seed.cluster[i]) << '\n';
  out << "matrix";
  for (const auto& row : seed.matrix.rows()) out << ' ' << triple_text(std::array<Integer, 3>{row[0], row[1], row[2]});
  out << "\nspecialization " << triple_text(values) << '\n';
  return kExitOk;
}

void print_descent(const Triple& t, EquationKind kind, std::ostream& out) {
  const Descent d = descend(t, kind);
  out << d.triples.front().str();
  for (std::size_t i = 0; i < d.positions.size(); ++i) {
    out << " -" << d.positions[i] << "-> " << d.triples[i + 1].str();
  }
  out << '\n';
}

int cmd_descend(const Options& o, std::istream& in, std::ostream& out) {
  const EquationKind kind = parse_kind(o.kind);
  if (!o.triple.empty()) {
    print_descent(triple_of(o.triple), kind, out);
    return kExitOk;
  }
  std::vector<Triple> triples;
  for (std::string line; std::getline(in, line);) {
    const auto tokens = tokens_of(line);
    if (!tokens.empty()) triples.push_back(triple_of(tokens));
  }
  for (const auto& t : triples) print_descent(t, kind, out);
  return kExitOk;
}

int cmd_census(const Options& o, std::ostream& out) {
  if (o.max_value.empty()) throw ParseError("census needs --max-value");
  const auto census = max_multiplicity_census(parse_kind(o.kind), parse_integer(o.max_value));
  bool unique = true;
  for (const auto& [value, count] : census) {
    out << value << ' ' << count << '\n';
    unique = unique && count == 1;
  }
  out << (unique ? "every maximum occurs once" : "some maximum occurs more than once") << " among "
      << census.size() << " maxima up to " << o.max_value << '\n';
  return unique ? kExitOk : kExitFailure;
}

int cmd_seed(const Options& o, std::ostream& out) {
  out << seed_to_json(initial_seed(parse_kind(o.kind))).dump() << '\n';
  return kExitOk;
}

int cmd_snake(const Options& o, std::ostream& out) {
  require_format(o.format, {"table", "json", "dot"});
  if (o.arc.empty()) throw ParseError("snake needs --arc");
  const ArcDescriptor arc = parse_arc(o.arc);
  const SnakeGraph g = build_snake_graph(arc);
  if (o.format == "dot") {
    std::optional<PerfectMatching> highlight;
    if (o.highlight >= 0) {
      const auto all = enumerate_matchings(g);
      if (static_cast<std::size_t>(o.highlight) >= all.size()) throw ParseError("--matching index out of range");
      highlight = all[static_cast<std::size_t>(o.highlight)];
    }
    out << snake_to_dot(g, highlight);
    return kExitOk;
  }
  const Monomial cross = cross_monomial(arc);
  const Integer matchings = count_matchings(g);
  const LaurentPolynomial numerator = numerator_polynomial(arc);
  const ContinuedFraction cf = continued_fraction(g);
  const Rational value = evaluate_cf(cf);
  if (o.format == "json") {
    Json j;
    j["arc"] = format_arc(arc);
    j["graph"] = snake_to_json(g);
    j["cross"] = to_text(cross);
    j["matchings"] = to_string(matchings);
    j["numerator"] = polynomial_to_json(numerator);
    Json terms = Json::array();
    for (const auto& t : cf.terms) terms.push_back(to_string(t));
    j["continued_fraction"] = std::move(terms);
    j["value"] = value.str();
    out << j.dump() << '\n';
    return kExitOk;
  }
  out << format_arc(arc) << '\n';
  out << "tiles " << g.tile_count() << "  shape " << (g.is_single_edge() ? "-" : g.shape_word()) << '\n';
  for (std::size_t i = 0; i < g.tile_count(); ++i) {
    const Tile& t = g.tiles()[i];
    out << "  tile " << i + 1 << ": S=x" << t.south << " W=x" << t.west << " N=x" << t.north << " E=x" << t.east
        << " diagonal=x" << t.diagonal << '\n';
  }
  out << "cross " << to_text(cross) << '\n';
  out << "perfect matchings " << matchings << '\n';
  out << "numerator " << to_text(numerator) << '\n';
  out << "continued fraction [";
  for (std::size_t i = 0; i < cf.terms.size(); ++i) out << (i ? "," : "") << cf.terms[i];
  out << "] = " << value << '\n';
  return value.numerator() == matchings ? kExitOk : kExitFailure;
}

int cmd_crosscheck(const Options& o, std::ostream& out) {
  if (o.depth < 0 || o.depth > kMaxCrosscheckDepth) {
    throw ParseError("crosscheck --depth must lie in 0.." + std::to_string(kMaxCrosscheckDepth));
  }
  const CrossCheckReport r = crosscheck(o.depth, o.inject_fault);
  for (const auto& row : r.rows) {
    out << word_text(row.word) << ' ' << row.tree.str() << "  cluster " << triple_text(row.cluster)
        << "  matchings " << triple_text(row.matchings) << "  continued fractions "
        << triple_text(row.cf_numerators) << (row.agree ? "" : "  MISMATCH") << '\n';
  }
  if (!r.ok) {
    out << "FAIL " << r.detail << '\n';
    return kExitFailure;
  }
  out << "PASS " << r.rows.size() << " vertices agree three ways\n";
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Solutions of (x+y)^2+(y+z)^2+(z+x)^2 = 12xyz and x^2+y^2+z^2 = 3xyz", "markov12"};
  app.require_subcommand(1);
  Options o;

  auto kind = [&](CLI::App* c) {
    c->add_option("--kind", o.kind, "twelve or markov")->check(CLI::IsMember({"twelve", "markov"}));
  };
  auto format = [&](CLI::App* c) { c->add_option("--format", o.format, "table, json or dot"); };

  CLI::App* enumerate_cmd = app.add_subcommand("enumerate", "List tree vertices breadth-first");
  kind(enumerate_cmd);
  format(enumerate_cmd);
  enumerate_cmd->add_option("--depth", o.depth, "Maximum depth");
  enumerate_cmd->add_option("--max-value", o.max_value, "Prune vertices whose maximum exceeds this");

  CLI::App* verify_cmd = app.add_subcommand("verify", "Check triples read from standard input");
  kind(verify_cmd);

  CLI::App* mutate_cmd = app.add_subcommand("mutate", "Mutate the initial seed along a word");
  kind(mutate_cmd);
  format(mutate_cmd);
  mutate_cmd->add_option("--word", o.word, "Comma-separated positions, e.g. 3,2,3")->required();

  CLI::App* descend_cmd = app.add_subcommand("descend", "Walk a solution down to the root chain");
  kind(descend_cmd);
  descend_cmd->add_option("triple", o.triple, "a b c (read from standard input when omitted)")->expected(3);

  CLI::App* census_cmd = app.add_subcommand("census", "Count solutions sharing each maximum");
  kind(census_cmd);
  census_cmd->add_option("--max-value", o.max_value, "Largest component considered")->required();

  CLI::App* seed_cmd = app.add_subcommand("seed", "Print the initial seed as JSON");
  kind(seed_cmd);

  CLI::App* snake_cmd = app.add_subcommand("snake", "Snake graph of an arc");
  format(snake_cmd);
  snake_cmd->add_option("--arc", o.arc, "Crossing word, e.g. \"3ccw 2cw 3cw\" or \"l2\"")->required();
  snake_cmd->add_option("--matching", o.highlight, "Index of the matching highlighted in DOT output");

  CLI::App* crosscheck_cmd = app.add_subcommand("crosscheck", "Tree, cluster and snake graph values agree");
  crosscheck_cmd->add_option("--depth", o.depth, "Maximum depth (at most 6)");
  crosscheck_cmd->add_flag("--inject-fault", o.inject_fault)->group("");

  std::vector<std::string> argv_storage{"markov12"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*enumerate_cmd) return cmd_enumerate(o, out);
    if (*verify_cmd) return cmd_verify(o, in, out);
    if (*mutate_cmd) return cmd_mutate(o, out);
    if (*descend_cmd) return cmd_descend(o, in, out);
    if (*census_cmd) return cmd_census(o, out);
    if (*seed_cmd) return cmd_seed(o, out);
    if (*snake_cmd) return cmd_snake(o, out);
    if (*crosscheck_cmd) return cmd_crosscheck(o, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace markov12
