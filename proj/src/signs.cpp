#include "markov12/errors.hpp"
#include "markov12/snake_graph.hpp"

namespace markov12 {

std::vector<Sign> sign_assignment(const SnakeGraph& g) {
  std::vector<Sign> signs(g.edges().size(), Sign::Minus);
  Sign s = Sign::Minus;
  for (std::size_t j = 0; j < g.tile_count(); ++j, s = flip(s)) {
    const auto [south, west, north, east] = g.tile_edges(j);
    signs[south] = s;
    signs[east] = s;
    signs[north] = flip(s);
    signs[west] = flip(s);
  }
  return signs;
}

bool sign_rules_hold(const SnakeGraph& g, const std::vector<Sign>& signs) {
  if (signs.size() != g.edges().size()) return false;
  for (std::size_t j = 0; j < g.tile_count(); ++j) {
    const auto [south, west, north, east] = g.tile_edges(j);
    if (signs[north] != signs[west] || signs[south] != signs[east] || signs[north] == signs[south]) {
      return false;
    }
  }
  return true;
}

SignSequence sign_sequence(const SnakeGraph& g, const std::vector<Sign>& signs) {
  if (signs.size() != g.edges().size()) throw WrongShape("one sign per edge expected");
  if (g.is_single_edge()) return {signs[0]};
  SignSequence seq{signs[g.tile_edges(0)[0]]};
  for (std::size_t j = 0; j + 1 < g.tile_count(); ++j) {
    const auto edges = g.tile_edges(j);
    seq.push_back(signs[g.shape()[j] == Glue::Up ? edges[2] : edges[3]]);
  }
  seq.push_back(signs[g.tile_edges(g.tile_count() - 1)[3]]);
  return seq;
}

SignSequence sign_sequence(const SnakeGraph& g) { return sign_sequence(g, sign_assignment(g)); }

ContinuedFraction run_lengths(const SignSequence& s) {
  ContinuedFraction cf;
  for (std::size_t i = 0; i < s.size();) {
    std::size_t k = i;
    while (k < s.size() && s[k] == s[i]) ++k;
    cf.terms.emplace_back(static_cast<unsigned long>(k - i));
    i = k;
  }
  return cf;
}

ContinuedFraction continued_fraction(const SnakeGraph& g) { return run_lengths(sign_sequence(g)); }

Rational evaluate_cf(const ContinuedFraction& cf) {
  if (cf.terms.empty()) throw WrongShape("empty continued fraction");
  // Backwards: p/q <- a + q/p.
  Integer p = cf.terms.back(), q = 1;
  for (auto it = cf.terms.rbegin() + 1; it != cf.terms.rend(); ++it) {
    Integer np = *it * p + q;
    q = p;
    p = np;
  }
  return Rational(p, q);
}

MatchingCheck numerator_matching_check(const ArcDescriptor& arc) {
  MatchingCheck r;
  const SnakeGraph g = build_snake_graph(arc);
  r.cf = continued_fraction(g);
  r.cf_numerator = evaluate_cf(r.cf).numerator();
  r.matching_count = count_matchings(g);
  r.ok = r.cf_numerator == r.matching_count;
  if (!r.ok) {
    r.diagnostic = format_arc(arc) + ": continued fraction numerator " + to_string(r.cf_numerator) +
                   " but " + to_string(r.matching_count) + " perfect matchings";
  }
  return r;
}

}  // namespace markov12
