#include <gtest/gtest.h>

#include <set>

#include "markov12/errors.hpp"
#include "markov12/farey.hpp"
#include "markov12/serialize.hpp"
#include "markov12/snake_graph.hpp"
#include "oracles.hpp"

using namespace markov12;

namespace {

std::vector<ArcDescriptor> all_words(std::size_t length) {
  std::vector<ArcDescriptor> out;
  std::vector<Crossing> cur;
  auto rec = [&](auto&& self) -> void {
    if (cur.size() == length) {
      out.push_back(ArcDescriptor{cur, 0});
      return;
    }
    for (int label = 1; label <= 3; ++label) {
      for (auto p : {Passage::Clockwise, Passage::Counterclockwise}) {
        cur.push_back({label, p});
        self(self);
        cur.pop_back();
      }
    }
  };
  rec(rec);
  return out;
}

std::vector<ArcDescriptor> valid_words(std::size_t max_length) {
  std::vector<ArcDescriptor> out;
  for (std::size_t n = 1; n <= max_length; ++n) {
    for (auto& a : all_words(n)) {
      if (is_valid_arc(a)) out.push_back(a);
    }
  }
  return out;
}

// Loops of triangulations reached by flipping along every reduced word of the given length.
std::vector<ArcDescriptor> flip_arcs(std::size_t max_length) {
  std::set<std::string> seen;
  std::vector<ArcDescriptor> out;
  std::vector<std::pair<MutationWord, farey::Triangulation>> level{{{}, farey::Triangulation::initial()}};
  for (std::size_t len = 0; len <= max_length; ++len) {
    std::vector<std::pair<MutationWord, farey::Triangulation>> next;
    for (auto& [w, t] : level) {
      for (int k = 1; k <= 3; ++k) {
        const auto arc = t.arc(k);
        if (seen.insert(format_arc(arc)).second) out.push_back(arc);
        if (len < max_length && (w.empty() || w.back() != k)) {
          MutationWord nw = w;
          nw.push_back(k);
          next.emplace_back(nw, t.flip(k));
        }
      }
    }
    level = std::move(next);
  }
  return out;
}

LaurentPolynomial from_oracle(const std::map<std::vector<std::int64_t>, long>& w) {
  std::vector<std::pair<Monomial, Integer>> terms;
  for (const auto& [e, c] : w) terms.emplace_back(Monomial(e), Integer(c));
  return LaurentPolynomial::from_terms(3, std::move(terms));
}

}  // namespace

TEST(Arc, ParseAndFormat) {
  const auto a = parse_arc("arc 3ccw 2cw 3cw");
  EXPECT_EQ(a.crossings.size(), 3u);
  EXPECT_EQ(format_arc(a), "arc 3ccw 2cw 3cw");
  EXPECT_EQ(parse_arc("3ccw 2cw 3cw"), a);
  EXPECT_EQ(parse_arc("l2"), ArcDescriptor::initial(2));
  EXPECT_EQ(format_arc(parse_arc("arc l3")), "arc l3");
  EXPECT_THROW(parse_arc(""), ParseError);
  EXPECT_THROW(parse_arc("4cw"), ParseError);
  EXPECT_THROW(parse_arc("3up"), ParseError);
  EXPECT_THROW(parse_arc("l0"), ParseError);
}

TEST(Arc, ValidWordsByLength) {
  // Reference counts from an independent Farey-tessellation script.
  const std::vector<std::size_t> expected{6, 0, 12, 0, 12};
  for (std::size_t n = 1; n <= 5; ++n) {
    std::size_t count = 0;
    for (const auto& a : all_words(n)) count += is_valid_arc(a) ? 1 : 0;
    EXPECT_EQ(count, expected[n - 1]) << "length " << n;
  }
  std::set<std::string> three;
  for (const auto& a : all_words(3)) {
    if (is_valid_arc(a)) three.insert(format_arc(a));
  }
  const std::set<std::string> frozen{"arc 1cw 2cw 1ccw",  "arc 1cw 2ccw 1ccw", "arc 1ccw 3cw 1cw",
                                     "arc 1ccw 3ccw 1cw", "arc 2ccw 1cw 2cw",  "arc 2ccw 1ccw 2cw",
                                     "arc 2cw 3cw 2ccw",  "arc 2cw 3ccw 2ccw", "arc 3cw 1cw 3ccw",
                                     "arc 3cw 1ccw 3ccw", "arc 3ccw 2cw 3cw",  "arc 3ccw 2ccw 3cw"};
  EXPECT_EQ(three, frozen);
}

TEST(Arc, InvalidWordsAreRejected) {
  EXPECT_THROW(build_snake_graph(parse_arc("3cw 2ccw 3cw")), InvalidArc);
  EXPECT_THROW(build_snake_graph(parse_arc("3cw 3ccw")), InvalidArc);
  EXPECT_FALSE(is_valid_arc(parse_arc("1cw 2cw")));
}

TEST(Arc, ReversalIsAValidArcWithTheSameCounts) {
  for (const auto& a : valid_words(5)) {
    const auto r = reversed(a);
    ASSERT_TRUE(is_valid_arc(r)) << format_arc(a);
    EXPECT_EQ(reversed(r), a);
    EXPECT_EQ(count_matchings(build_snake_graph(r)), count_matchings(build_snake_graph(a)));
    EXPECT_EQ(cluster_variable_of_arc(r), cluster_variable_of_arc(a));
  }
}

TEST(SnakeGraph, GoldenExample) {
  const auto arc = parse_arc("arc 3ccw 2cw 3cw");
  const SnakeGraph g = build_snake_graph(arc);
  EXPECT_EQ(g.tile_count(), 6u);
  EXPECT_EQ(g.shape_word(), "URRUR");
  EXPECT_EQ(diagonal_monomial(g), (Monomial{0, 2, 4}));
  EXPECT_EQ(cross_monomial(arc), (Monomial{0, 1, 2}));
  EXPECT_EQ(count_matchings(g), 13);
  EXPECT_EQ(to_text(numerator_polynomial(arc)),
            "x1^4 + 2*x1^3*x2 + x1^3*x3 + 3*x1^2*x2^2 + x1^2*x2*x3 + x1^2*x3^2 + 2*x1*x2^3 + x1*x2^2*x3 + x2^4");
  const auto cf = continued_fraction(g);
  EXPECT_EQ(cf.terms, (std::vector<Integer>{1, 2, 3, 1}));
  EXPECT_EQ(evaluate_cf(cf), Rational(Integer(13), Integer(9)));
  EXPECT_TRUE(numerator_matching_check(arc).ok);
}

TEST(SnakeGraph, DegenerateArcIsASingleEdge) {
  for (int k = 1; k <= 3; ++k) {
    const auto arc = ArcDescriptor::initial(k);
    const SnakeGraph g = build_snake_graph(arc);
    EXPECT_TRUE(g.is_single_edge());
    EXPECT_EQ(count_matchings(g), 1);
    EXPECT_EQ(enumerate_matchings(g).size(), 1u);
    EXPECT_EQ(continued_fraction(g).terms, std::vector<Integer>{1});
    EXPECT_EQ(cluster_variable_of_arc(arc), LaurentPolynomial::variable(3, static_cast<std::size_t>(k - 1)));
  }
}

TEST(SnakeGraph, GlueConsistencyIsChecked) {
  EXPECT_THROW(SnakeGraph({Tile{1, 2, 3, 1, 2}, Tile{1, 2, 3, 1, 2}}, {Glue::Up}), WrongShape);
  EXPECT_THROW(SnakeGraph({Tile{1, 2, 3, 1, 2}}, {Glue::Up}), WrongShape);
  EXPECT_NO_THROW(SnakeGraph({Tile{1, 2, 3, 1, 2}, Tile{3, 2, 3, 1, 2}}, {Glue::Up}));
}

TEST(SnakeGraph, MatchingsAgreeWithBruteForce) {
  std::vector<ArcDescriptor> arcs = valid_words(3);
  for (const auto& a : flip_arcs(3)) arcs.push_back(a);
  for (const auto& arc : arcs) {
    const SnakeGraph g = build_snake_graph(arc);
    if (g.tile_count() > 12) continue;
    const auto brute = oracle::matchings(g);
    std::vector<PerfectMatching> sorted_brute(brute.begin(), brute.end());
    std::sort(sorted_brute.begin(), sorted_brute.end());
    EXPECT_EQ(enumerate_matchings(g), sorted_brute) << format_arc(arc);
    EXPECT_EQ(enumerate_matchings_serial(g), sorted_brute);
    EXPECT_EQ(count_matchings(g), Integer(static_cast<unsigned long>(brute.size())));
    EXPECT_EQ(weight_polynomial(g), from_oracle(oracle::weights(g))) << format_arc(arc);
  }
}

TEST(SnakeGraph, CountsAgreeAcrossMethods) {
  for (const auto& arc : flip_arcs(4)) {
    const SnakeGraph g = build_snake_graph(arc);
    const Integer n = count_matchings(g);
    ASSERT_EQ(count_matchings_by_enumeration(g), n) << format_arc(arc);
    ASSERT_EQ(count_matchings_by_enumeration_serial(g), n);
    ASSERT_EQ(lp_eval(weight_polynomial(g), std::vector<Rational>(3, Rational(1))), Rational(n));
    ASSERT_TRUE(numerator_matching_check(arc).ok) << numerator_matching_check(arc).diagnostic;
    // Every cluster variable is a Laurent polynomial with denominator cross.
    const auto num = numerator_polynomial(arc);
    ASSERT_TRUE(lp_is_polynomial(num));
    ASSERT_TRUE(lp_is_laurent_positive(num));
    ASSERT_EQ(lp_mul_monomial(cluster_variable_of_arc(arc), cross_monomial(arc)), num);
  }
}

TEST(Signs, RulesAndSequence) {
  for (const auto& arc : flip_arcs(3)) {
    const SnakeGraph g = build_snake_graph(arc);
    const auto signs = sign_assignment(g);
    ASSERT_TRUE(sign_rules_hold(g, signs));
    if (!g.is_single_edge()) EXPECT_EQ(signs[g.tile_edges(0)[0]], Sign::Minus);
    const auto seq = sign_sequence(g);
    EXPECT_EQ(seq.size(), g.tile_count() + 1);
    auto flipped = signs;
    if (!g.is_single_edge()) {
      flipped[g.tile_edges(0)[2]] = flip(flipped[g.tile_edges(0)[2]]);
      EXPECT_FALSE(sign_rules_hold(g, flipped));
    }
  }
}

TEST(Signs, ContinuedFractionEvaluation) {
  EXPECT_EQ(run_lengths({Sign::Minus, Sign::Plus, Sign::Plus, Sign::Minus}).terms, (std::vector<Integer>{1, 2, 1}));
  EXPECT_EQ(evaluate_cf({{Integer(2)}}), Rational(2));
  EXPECT_EQ(evaluate_cf({{Integer(1), Integer(2), Integer(3), Integer(1)}}), Rational(Integer(13), Integer(9)));
  EXPECT_THROW(evaluate_cf({}), WrongShape);
}

TEST(Farey, CuspsAndChords) {
  using namespace farey;
  const Cusp zero = Cusp::integer(0), one = Cusp::integer(1), inf = Cusp::infinity();
  EXPECT_EQ(Cusp(Integer(2), Integer(-4)), Cusp(Integer(-1), Integer(2)));
  EXPECT_TRUE(cusp_less(zero, one));
  EXPECT_TRUE(cusp_less(one, inf));
  EXPECT_TRUE(chords_cross(zero, Cusp::integer(2), one, inf));
  EXPECT_FALSE(chords_cross(zero, one, Cusp::integer(2), inf));
  EXPECT_EQ(third_vertex(zero, one, inf), Cusp(Integer(1), Integer(2)));
  const Mobius g = map_from_root(one, Cusp::integer(2), inf);
  EXPECT_EQ(g(zero), one);
  EXPECT_EQ(g(inf), inf);
  EXPECT_EQ(g * g.inverse(), Mobius{});
}

TEST(Farey, CrossingWordsOfEdgesAreInitialArcs) {
  using namespace farey;
  EXPECT_EQ(crossing_word(Cusp::integer(0), Cusp::integer(1)), ArcDescriptor::initial(1));
  EXPECT_EQ(crossing_word(Cusp::integer(1), Cusp::infinity()), ArcDescriptor::initial(2));
  EXPECT_EQ(crossing_word(Cusp::infinity(), Cusp::integer(0)), ArcDescriptor::initial(3));
}

TEST(Farey, TriangulationFlipsAreInvolutions) {
  const auto t0 = farey::Triangulation::initial();
  for (int k = 1; k <= 3; ++k) EXPECT_EQ(t0.arc(k), ArcDescriptor::initial(k));
  for (int k = 1; k <= 3; ++k) {
    const auto back = t0.flip(k).flip(k);
    for (int j = 1; j <= 3; ++j) EXPECT_EQ(back.arc(j), t0.arc(j));
  }
  EXPECT_EQ(count_matchings(build_snake_graph(t0.flip(3).arc(3))), 3);
}

TEST(Serialize, SnakeJsonAndDot) {
  const SnakeGraph g = build_snake_graph(parse_arc("3ccw 2cw 3cw"));
  const std::string text = snake_to_json(g).dump();
  EXPECT_EQ(text.rfind(R"({"tile_count":6,"shape":"URRUR","tiles":[)", 0), 0u);
  const SnakeGraph back = snake_from_json(parse_json(text));
  EXPECT_EQ(back.tiles(), g.tiles());
  EXPECT_EQ(snake_to_json(back).dump(), text);
  const SnakeGraph edge = SnakeGraph::single_edge(2);
  EXPECT_EQ(snake_to_json(snake_from_json(snake_to_json(edge))).dump(), snake_to_json(edge).dump());

  const auto m = enumerate_matchings(g).front();
  const std::string dot = snake_to_dot(g, m);
  EXPECT_NE(dot.find("graph snake {"), std::string::npos);
  std::size_t red = 0;
  for (std::size_t p = dot.find("color=red"); p != std::string::npos; p = dot.find("color=red", p + 1)) ++red;
  EXPECT_EQ(red, m.size());
}
