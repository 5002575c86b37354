#include "markov12/arc.hpp"

#include <algorithm>
#include <sstream>

#include "markov12/errors.hpp"
#include "markov12/farey.hpp"

namespace markov12 {

ArcDescriptor ArcDescriptor::initial(int label) {
  ArcDescriptor a;
  a.initial_label = label;
  return a;
}

ArcDescriptor parse_arc(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> tokens;
  for (std::string tok; in >> tok;) tokens.push_back(tok);
  if (!tokens.empty() && tokens.front() == "arc") tokens.erase(tokens.begin());
  if (tokens.empty()) throw ParseError("empty arc");

  if (tokens.size() == 1 && tokens[0].size() == 2 && tokens[0][0] == 'l') {
    const int label = tokens[0][1] - '0';
    if (label < 1 || label > 3) throw ParseError("initial arc must be l1, l2 or l3");
    return ArcDescriptor::initial(label);
  }
  ArcDescriptor arc;
  for (const auto& tok : tokens) {
    if (tok.size() < 3 || tok[0] < '1' || tok[0] > '3') throw ParseError("bad crossing '" + tok + "'");
    const std::string dir = tok.substr(1);
    Passage p;
    if (dir == "cw") p = Passage::Clockwise;
    else if (dir == "ccw") p = Passage::Counterclockwise;
    else throw ParseError("bad crossing '" + tok + "'");
    arc.crossings.push_back({tok[0] - '0', p});
  }
  return arc;
}

std::string format_arc(const ArcDescriptor& arc) {
  if (arc.is_initial()) return "arc l" + std::to_string(arc.initial_label);
  std::string out = "arc";
  for (const auto& x : arc.crossings) {
    out += ' ' + std::to_string(x.label) + (x.passage == Passage::Clockwise ? "cw" : "ccw");
  }
  return out;
}

ArcDescriptor reversed(const ArcDescriptor& arc) {
  ArcDescriptor out = arc;
  std::reverse(out.crossings.begin(), out.crossings.end());
  for (auto& x : out.crossings) {
    x.passage = x.passage == Passage::Clockwise ? Passage::Counterclockwise : Passage::Clockwise;
  }
  return out;
}

void validate_arc(const ArcDescriptor& arc) {
  const auto lift = farey::lift_arc(arc);
  if (!farey::is_simple(lift)) throw InvalidArc(format_arc(arc) + " is not a simple arc");
}

bool is_valid_arc(const ArcDescriptor& arc) {
  try {
    validate_arc(arc);
    return true;
  } catch (const InvalidArc&) {
    return false;
  }
}

Monomial cross_monomial(const ArcDescriptor& arc) {
  Monomial m(3);
  for (const auto& x : arc.crossings) {
    if (x.label < 1 || x.label > 3) throw InvalidArc("crossing label out of range");
    m[static_cast<std::size_t>(x.label - 1)] += 1;
  }
  return m;
}

}  // namespace markov12
