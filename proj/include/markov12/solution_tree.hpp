#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "markov12/integer.hpp"

namespace markov12 {

// Twelve: (x+y)^2 + (y+z)^2 + (z+x)^2 = 12xyz.  Markov: x^2 + y^2 + z^2 = 3xyz.
enum class EquationKind { Twelve, Markov };

std::string_view kind_name(EquationKind kind);
EquationKind parse_kind(std::string_view name);

// Position-ordered; positions are 1-based in the public API.
struct Triple {
  Integer a, b, c;

  const Integer& at(int position) const;
  Integer& at(int position);
  // Position of the strict maximum; 0 when the maximum is shared.
  int max_position() const;
  const Integer& max() const;
  std::array<Integer, 3> sorted() const;
  std::string str() const;  // "(a,b,c)"

  friend bool operator==(const Triple&, const Triple&) = default;
};

using MutationWord = std::vector<int>;

struct TreeNode {
  Triple triple;
  int depth = 0;
  MutationWord path;
};

// Depth of the vertex reached by a path of the given length. The root chain
// occupies depths 0, 1, 2; below (1,13,3) (resp. (1,5,2)) the first branching
// generation shares depth 2 and each later generation adds one, so depth 3
// holds nine vertices for both equations.
int depth_of_path_length(std::size_t length);
// Largest path length whose depth is at most max_depth.
std::size_t max_path_length(int max_depth);

bool verify(const Triple& t, EquationKind kind);
Triple mutate(const Triple& t, int k, EquationKind kind);
// Replaces component k by (p^2 + q^2 + pq) / r; Twelve only.
Triple mutate_by_division(const Triple& t, int k);

TreeNode tree_root();
// One child on the root chain, otherwise two: the non-maximal positions in
// descending position order.
std::vector<TreeNode> children(const TreeNode& node, EquationKind kind);

// Breadth-first, deterministic. Nodes whose maximum exceeds max_value are
// pruned together with their subtrees (children strictly increase the maximum).
std::vector<TreeNode> enumerate(EquationKind kind, int max_depth,
                                const std::optional<Integer>& max_value = std::nullopt);
std::vector<TreeNode> enumerate_serial(EquationKind kind, int max_depth,
                                       const std::optional<Integer>& max_value = std::nullopt);

bool is_singular(const Triple& t);

struct Descent {
  std::vector<Triple> triples;  // starts at the input, ends at a singular triple
  std::vector<int> positions;   // positions[i] turns triples[i] into triples[i+1]
};
Descent descend(const Triple& t, EquationKind kind);

bool pairwise_coprime(const Triple& t);

// Maximum value -> number of unordered solutions with that maximum, over all
// solutions whose components are at most max_value.
std::map<Integer, std::size_t> max_multiplicity_census(EquationKind kind, const Integer& max_value);
std::map<Integer, std::size_t> max_multiplicity_census_serial(EquationKind kind,
                                                              const Integer& max_value);

// Extends by next = (last^2 + last + 1) / second_last; throws NotDivisible.
std::vector<Integer> a101368_extend(std::vector<Integer> prefix, std::size_t count);

// For t = (1,b,c): b | 1 + c + c^2 and c | 1 + b + b^2. Throws WrongShape if t.a != 1.
bool divisibility_check(const Triple& t);

}  // namespace markov12
