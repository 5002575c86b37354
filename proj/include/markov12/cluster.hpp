#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "markov12/laurent.hpp"
#include "markov12/rational.hpp"
#include "markov12/solution_tree.hpp"

namespace markov12 {

// Square integer matrix B with a positive diagonal S making SB skew-symmetric.
class ExchangeMatrix {
 public:
  // Throws NotSkewSymmetrizable (or WrongShape when not square).
  explicit ExchangeMatrix(std::vector<std::vector<Integer>> rows);

  // Delta = [[0,1,-1],[-1,0,1],[1,-1,0]].
  static ExchangeMatrix delta();

  std::size_t size() const { return rows_.size(); }
  // 0-based indices.
  const Integer& at(std::size_t i, std::size_t j) const { return rows_[i][j]; }
  const std::vector<std::vector<Integer>>& rows() const { return rows_; }
  // Smallest positive integer skew-symmetrizer.
  const std::vector<Integer>& symmetrizer() const { return s_; }

  ExchangeMatrix scaled(const Integer& factor) const;
  ExchangeMatrix operator-() const { return scaled(-1); }

  friend bool operator==(const ExchangeMatrix& x, const ExchangeMatrix& y) { return x.rows_ == y.rows_; }

 private:
  std::vector<std::vector<Integer>> rows_;
  std::vector<Integer> s_;
};

// Row-ratio propagation over the graph of nonzero entries; entries of the
// result are bounded by `bound`.
std::optional<std::vector<Integer>> find_skew_symmetrizer(const std::vector<std::vector<Integer>>& rows,
                                                          const Integer& bound = 1000000);
bool is_skew_symmetrized_by(const std::vector<std::vector<Integer>>& rows, const std::vector<Integer>& s);

class MutationDiagonal {
 public:
  explicit MutationDiagonal(std::vector<Integer> d);
  static MutationDiagonal uniform(std::size_t n, const Integer& value);

  std::size_t size() const { return d_.size(); }
  const Integer& operator[](std::size_t i) const { return d_[i]; }
  const std::vector<Integer>& values() const { return d_; }

  friend bool operator==(const MutationDiagonal&, const MutationDiagonal&) = default;

 private:
  std::vector<Integer> d_;
};

// k is 1-based throughout this module.
ExchangeMatrix mutate_matrix(const ExchangeMatrix& b, int k, const MutationDiagonal& d);

struct Seed {
  std::vector<LaurentPolynomial> cluster;
  ExchangeMatrix matrix;
  MutationDiagonal diagonal;

  // Cluster (x1, ..., xn) in the n initial variables.
  static Seed initial(ExchangeMatrix matrix, MutationDiagonal diagonal);

  friend bool operator==(const Seed&, const Seed&) = default;
};

// Twelve: (Delta, 2I). Markov: (2 Delta, I).
Seed initial_seed(EquationKind kind);

// Throws LaurentViolation when the exchange numerator is not divisible by x_k.
Seed mutate_seed(const Seed& s, int k);
Seed apply_word(Seed s, const MutationWord& w);
std::array<Rational, 3> specialize_ones(const Seed& s);

// Words of the tree T'_3 in breadth-first order, up to the given depth (same
// depth convention as the solution tree): prefix [3,2], then the two labels
// other than the last one, larger label first.
std::vector<MutationWord> t3_words(int max_depth);

struct WalkReport {
  bool ok = true;
  std::size_t vertices = 0;
  MutationWord offending_word;
  std::string detail;
};
// Walks T'_3 and compares specialize_ones against the solution tree node by node.
WalkReport walk_check(int max_depth, EquationKind kind);

struct LaurentWalkReport {
  std::size_t seeds = 0;          // seeds reached by reduced words
  std::size_t involutions = 0;    // mu_k(mu_k(s)) == s checks performed
  std::size_t failures = 0;
  std::vector<std::string> details;
};
// Depth-first over every word of length <= max_length without immediate
// repeats. Each new cluster variable must be Laurent with positive
// coefficients; every edge is also checked to be an involution.
LaurentWalkReport laurent_walk(const Seed& root, std::size_t max_length);
LaurentWalkReport laurent_walk_serial(const Seed& root, std::size_t max_length);

}  // namespace markov12
