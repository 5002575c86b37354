#include <omp.h>

#include "markov12/parallel.hpp"
#include "markov12/solution_tree.hpp"

namespace markov12 {

namespace {

using Census = std::map<Integer, std::size_t>;

void record(Census& census, const TreeNode& n) { ++census[n.triple.max()]; }

void census_subtree(const TreeNode& n, EquationKind kind, const Integer& max_value, Census& census) {
  record(census, n);
  for (const auto& c : children(n, kind)) {
    if (c.triple.max() <= max_value) census_subtree(c, kind, max_value, census);
  }
}

}  // namespace

// Every unordered solution occurs exactly once in the tree, so counting tree
// vertices by their maximum is a census of solutions.
Census max_multiplicity_census_serial(EquationKind kind, const Integer& max_value) {
  Census census;
  if (max_value >= 1) census_subtree(tree_root(), kind, max_value, census);
  return census;
}

Census max_multiplicity_census(EquationKind kind, const Integer& max_value) {
  Census census;
  if (max_value < 1) return census;

  // Expand breadth-first until there is enough independent work to share.
  const int threads = thread_budget();
  std::vector<TreeNode> frontier{tree_root()};
  while (!frontier.empty() && frontier.size() < static_cast<std::size_t>(8 * threads)) {
    std::vector<TreeNode> next;
    for (const auto& n : frontier) {
      record(census, n);
      for (auto& c : children(n, kind)) {
        if (c.triple.max() <= max_value) next.push_back(std::move(c));
      }
    }
    frontier = std::move(next);
  }

  std::vector<Census> partial(frontier.size());
  const auto count = static_cast<std::ptrdiff_t>(frontier.size());
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    census_subtree(frontier[static_cast<std::size_t>(i)], kind, max_value, partial[static_cast<std::size_t>(i)]);
  }
  for (const auto& p : partial) {
    for (const auto& [value, n] : p) census[value] += n;
  }
  return census;
}

}  // namespace markov12
