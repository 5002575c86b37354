#pragma once

#include <array>
#include <string>
#include <vector>

#include "markov12/cluster.hpp"
#include "markov12/solution_tree.hpp"

namespace markov12 {

// One vertex of T'_3: the tree triple, the cluster seed specialised at ones,
// and for each loop of the flipped triangulation its perfect-matching count
// and continued-fraction numerator.
struct CrossCheckRow {
  MutationWord word;
  Triple tree;
  std::array<Rational, 3> cluster;
  std::array<Integer, 3> matchings;
  std::array<Integer, 3> cf_numerators;
  bool agree = false;
};

struct CrossCheckReport {
  bool ok = true;
  std::vector<CrossCheckRow> rows;
  std::string detail;  // first disagreement
};

// Twelve equation only. `inject_fault` perturbs the last tree value so the
// failure path can be exercised.
CrossCheckReport crosscheck(int max_depth, bool inject_fault = false);

}  // namespace markov12
