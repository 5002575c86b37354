#include <gtest/gtest.h>

#include <random>
#include <set>

#include "markov12/errors.hpp"
#include "markov12/serialize.hpp"
#include "markov12/solution_tree.hpp"
#include "oracles.hpp"

using namespace markov12;

namespace {

std::vector<std::string> triples_of(const std::vector<TreeNode>& nodes) {
  std::vector<std::string> out;
  for (const auto& n : nodes) out.push_back(n.triple.str());
  return out;
}

}  // namespace

TEST(SolutionTree, TwelveGoldenDepthThree) {
  const std::vector<std::string> expected{"(1,1,1)",    "(1,1,3)",      "(1,13,3)",
                                          "(1,13,61)",  "(217,13,3)",   "(1,291,61)",
                                          "(4683,13,61)", "(217,13,16693)", "(217,3673,3)"};
  EXPECT_EQ(triples_of(enumerate(EquationKind::Twelve, 3)), expected);
}

TEST(SolutionTree, MarkovGoldenDepthThree) {
  const std::vector<std::string> expected{"(1,1,1)",  "(1,1,2)",    "(1,5,2)",   "(1,5,13)", "(29,5,2)",
                                          "(1,34,13)", "(194,5,13)", "(29,5,433)", "(29,169,2)"};
  EXPECT_EQ(triples_of(enumerate(EquationKind::Markov, 3)), expected);
}

TEST(SolutionTree, DepthConvention) {
  EXPECT_EQ(triples_of(enumerate(EquationKind::Twelve, 0)), std::vector<std::string>{"(1,1,1)"});
  const auto two = enumerate(EquationKind::Twelve, 2);
  ASSERT_EQ(two.size(), 5u);
  EXPECT_EQ(two[2].triple.str(), "(1,13,3)");
  EXPECT_EQ(two[2].depth, 2);
  EXPECT_EQ(two[2].path, (MutationWord{3, 2}));
  for (int d = 0; d <= 20; ++d) {
    EXPECT_EQ(depth_of_path_length(max_path_length(d)), d);
    EXPECT_GT(depth_of_path_length(max_path_length(d) + 1), d);
  }
  // Frozen counts: three vertices on the root chain, then a binary tree.
  EXPECT_EQ(enumerate(EquationKind::Twelve, 12).size(), 4097u);
  EXPECT_EQ(enumerate(EquationKind::Twelve, 13).size(), 8193u);
}

TEST(SolutionTree, ParallelMatchesSerial) {
  for (auto kind : {EquationKind::Twelve, EquationKind::Markov}) {
    const auto a = enumerate(kind, 11);
    const auto b = enumerate_serial(kind, 11);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      ASSERT_EQ(a[i].triple, b[i].triple);
      ASSERT_EQ(a[i].path, b[i].path);
      ASSERT_EQ(a[i].depth, b[i].depth);
    }
    const auto pa = enumerate(kind, 30, Integer(1000000));
    const auto pb = enumerate_serial(kind, 30, Integer(1000000));
    ASSERT_EQ(triples_of(pa), triples_of(pb));
  }
}

TEST(SolutionTree, MaxValuePruneMatchesFilter) {
  const auto all = enumerate(EquationKind::Twelve, 9);
  std::vector<std::string> kept;
  for (const auto& n : all) {
    if (n.triple.max() <= 100000) kept.push_back(n.triple.str());
  }
  EXPECT_EQ(triples_of(enumerate(EquationKind::Twelve, 9, Integer(100000))), kept);
}

TEST(SolutionTree, MutationFormsAgree) {
  for (const auto& n : enumerate(EquationKind::Twelve, 8)) {
    for (int k = 1; k <= 3; ++k) {
      const Triple m = mutate(n.triple, k, EquationKind::Twelve);
      ASSERT_EQ(m, mutate_by_division(n.triple, k));
      ASSERT_TRUE(verify(m, EquationKind::Twelve));
      ASSERT_EQ(mutate(m, k, EquationKind::Twelve), n.triple);  // involution
    }
  }
}

TEST(SolutionTree, ChildrenIncreaseTheMaximum) {
  for (auto kind : {EquationKind::Twelve, EquationKind::Markov}) {
    for (const auto& n : enumerate(kind, 8)) {
      for (const auto& c : children(n, kind)) ASSERT_GT(c.triple.max(), n.triple.max());
    }
  }
}

TEST(SolutionTree, ErrorsOnBadInput) {
  EXPECT_THROW(mutate(Triple{2, 2, 2}, 1, EquationKind::Twelve), NotASolution);
  EXPECT_THROW(mutate(Triple{1, 1, 3}, 4, EquationKind::Twelve), IndexOutOfRange);
  EXPECT_THROW(descend(Triple{1, 2, 3}, EquationKind::Markov), NotASolution);
  EXPECT_THROW(divisibility_check(Triple{3, 13, 217}), WrongShape);
  EXPECT_THROW(a101368_extend({Integer(1)}, 3), WrongShape);
  EXPECT_THROW(a101368_extend({Integer(2), Integer(2)}, 1), NotDivisible);
  EXPECT_THROW(parse_kind("cubic"), ParseError);
  EXPECT_FALSE(verify(Triple{2, 2, 2}, EquationKind::Twelve));
}

TEST(SolutionTree, MarkovNumbersFromScan) {
  const auto scanned = oracle::scan(EquationKind::Markov, 1000);
  std::set<oracle::Sorted> tree;
  for (const auto& n : enumerate(EquationKind::Markov, 64, Integer(1000))) {
    const auto s = n.triple.sorted();
    tree.insert({s[0].get_si(), s[1].get_si(), s[2].get_si()});
  }
  EXPECT_EQ(tree, scanned);
}

TEST(SolutionTree, DescentRetracesThePath) {
  std::mt19937_64 rng(7);
  const auto nodes = enumerate(EquationKind::Twelve, 10);
  for (int i = 0; i < 200; ++i) {
    const auto& n = nodes[std::uniform_int_distribution<std::size_t>(0, nodes.size() - 1)(rng)];
    if (n.path.size() < 2) continue;
    const Descent d = descend(n.triple, EquationKind::Twelve);
    // Undoing the path from the leaf end stops at (1,1,3).
    MutationWord reversed(n.path.rbegin(), n.path.rend() - 1);
    ASSERT_EQ(d.positions, reversed) << n.triple.str();
    ASSERT_TRUE(is_singular(d.triples.back()));
  }
}

TEST(SolutionTree, CensusParallelMatchesSerial) {
  for (auto kind : {EquationKind::Twelve, EquationKind::Markov}) {
    const auto a = max_multiplicity_census(kind, Integer("1000000000000"));
    EXPECT_EQ(a, max_multiplicity_census_serial(kind, Integer("1000000000000")));
    for (const auto& [value, count] : a) EXPECT_EQ(count, 1u) << value;
  }
}

TEST(SolutionTree, A101368Terms) {
  // Reference terms computed by an independent script.
  const std::vector<Integer> frozen{1, 1, 3, 13, 61, 291, 1393, 6673, 31971, 153181, 733933, 3516483};
  EXPECT_EQ(a101368_extend({1, 1}, 10), frozen);
}

TEST(SolutionTree, JsonNodeRecord) {
  const auto nodes = enumerate(EquationKind::Twelve, 2);
  EXPECT_EQ(node_to_json(nodes[2]).dump(), R"({"triple":["1","13","3"],"depth":2,"path":[3,2]})");
  for (const auto& n : enumerate(EquationKind::Twelve, 6)) {
    const std::string text = node_to_json(n).dump();
    EXPECT_EQ(node_to_json(node_from_json(parse_json(text))).dump(), text);
  }
  EXPECT_THROW(node_from_json(parse_json(R"({"triple":[1,13,3],"depth":2,"path":[]})")), ParseError);
}
