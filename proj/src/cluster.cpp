#include "markov12/cluster.hpp"

#include <omp.h>

#include "markov12/errors.hpp"
#include "markov12/parallel.hpp"

namespace markov12 {

namespace {

Integer positive_part(const Integer& x) { return x > 0 ? x : Integer(0); }

void check_index(int k, std::size_t n) {
  if (k < 1 || static_cast<std::size_t>(k) > n) {
    throw IndexOutOfRange("mutation index " + std::to_string(k) + " not in 1.." + std::to_string(n));
  }
}

}  // namespace

bool is_skew_symmetrized_by(const std::vector<std::vector<Integer>>& rows, const std::vector<Integer>& s) {
  const std::size_t n = rows.size();
  if (s.size() != n) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (s[i] <= 0) return false;
    for (std::size_t j = 0; j < n; ++j) {
      if (s[i] * rows[i][j] != -(s[j] * rows[j][i])) return false;
    }
  }
  return true;
}

std::optional<std::vector<Integer>> find_skew_symmetrizer(const std::vector<std::vector<Integer>>& rows,
                                                          const Integer& bound) {
  const std::size_t n = rows.size();
  std::vector<std::optional<Rational>> ratio(n);
  // Components of the nonzero pattern are independent; each gets its own scale.
  std::vector<int> component(n, -1);
  int components = 0;
  for (std::size_t root = 0; root < n; ++root) {
    if (ratio[root]) continue;
    ratio[root] = Rational(1);
    component[root] = components;
    std::vector<std::size_t> stack{root};
    while (!stack.empty()) {
      const std::size_t i = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < n; ++j) {
        if (rows[i][j] == 0) continue;
        if (rows[j][i] == 0 || sgn(rows[i][j]) == sgn(rows[j][i])) return std::nullopt;
        // s_j b_ji = -s_i b_ij
        const Rational sj = *ratio[i] * Rational(-rows[i][j], rows[j][i]);
        if (!ratio[j]) {
          ratio[j] = sj;
          component[j] = components;
          stack.push_back(j);
        } else if (*ratio[j] != sj) {
          return std::nullopt;
        }
      }
    }
    ++components;
  }

  std::vector<Integer> s(n);
  for (int c = 0; c < components; ++c) {
    Integer den_lcm = 1;
    for (std::size_t i = 0; i < n; ++i) {
      if (component[i] == c) den_lcm = lcm(den_lcm, ratio[i]->denominator());
    }
    Integer num_gcd = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (component[i] != c) continue;
      s[i] = ratio[i]->numerator() * (den_lcm / ratio[i]->denominator());
      num_gcd = gcd(num_gcd, s[i]);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (component[i] != c) continue;
      s[i] /= num_gcd;
      if (s[i] > bound) return std::nullopt;
    }
  }
  if (!is_skew_symmetrized_by(rows, s)) return std::nullopt;
  return s;
}

ExchangeMatrix::ExchangeMatrix(std::vector<std::vector<Integer>> rows) : rows_(std::move(rows)) {
  for (const auto& r : rows_) {
    if (r.size() != rows_.size()) throw WrongShape("exchange matrix is not square");
  }
  auto s = find_skew_symmetrizer(rows_);
  if (!s) throw NotSkewSymmetrizable("exchange matrix is not skew-symmetrizable");
  s_ = std::move(*s);
}

ExchangeMatrix ExchangeMatrix::delta() {
  return ExchangeMatrix({{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}});
}

ExchangeMatrix ExchangeMatrix::scaled(const Integer& factor) const {
  auto rows = rows_;
  for (auto& r : rows) {
    for (auto& x : r) x *= factor;
  }
  return ExchangeMatrix(std::move(rows));
}

MutationDiagonal::MutationDiagonal(std::vector<Integer> d) : d_(std::move(d)) {
  for (const auto& x : d_) {
    if (x <= 0) throw WrongShape("mutation diagonal entries must be positive");
  }
}

MutationDiagonal MutationDiagonal::uniform(std::size_t n, const Integer& value) {
  return MutationDiagonal(std::vector<Integer>(n, value));
}

ExchangeMatrix mutate_matrix(const ExchangeMatrix& b, int k, const MutationDiagonal& d) {
  const std::size_t n = b.size();
  check_index(k, n);
  if (d.size() != n) throw WrongShape("diagonal size differs from matrix size");
  const auto kk = static_cast<std::size_t>(k - 1);
  std::vector<std::vector<Integer>> out(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == kk || j == kk) {
        out[i][j] = -b.at(i, j);
      } else {
        out[i][j] = b.at(i, j) + d[kk] * (positive_part(b.at(i, kk)) * b.at(kk, j) +
                                           b.at(i, kk) * positive_part(-b.at(kk, j)));
      }
    }
  }
  return ExchangeMatrix(std::move(out));
}

Seed Seed::initial(ExchangeMatrix matrix, MutationDiagonal diagonal) {
  const std::size_t n = matrix.size();
  if (diagonal.size() != n) throw WrongShape("diagonal size differs from matrix size");
  std::vector<LaurentPolynomial> cluster;
  for (std::size_t i = 0; i < n; ++i) cluster.push_back(LaurentPolynomial::variable(n, i));
  return Seed{std::move(cluster), std::move(matrix), std::move(diagonal)};
}

Seed initial_seed(EquationKind kind) {
  if (kind == EquationKind::Twelve) return Seed::initial(ExchangeMatrix::delta(), MutationDiagonal::uniform(3, 2));
  return Seed::initial(ExchangeMatrix::delta().scaled(2), MutationDiagonal::uniform(3, 1));
}

Seed mutate_seed(const Seed& s, int k) {
  const std::size_t n = s.matrix.size();
  check_index(k, n);
  const auto kk = static_cast<std::size_t>(k - 1);
  const unsigned long d = s.diagonal[kk].get_ui();

  // (prod x_i^[-b_ik]+)^d * sum_s (prod x_i^b_ik)^s = sum_s prod x_i^(d[-b_ik]+ + s b_ik),
  // and every exponent d[-b_ik]+ + s b_ik is nonnegative for 0 <= s <= d.
  std::vector<std::vector<LaurentPolynomial>> powers(n);
  auto power = [&](std::size_t i, unsigned long e) -> const LaurentPolynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(LaurentPolynomial::constant(n, 1));
    while (cache.size() <= e) cache.push_back(lp_mul(cache.back(), s.cluster[i]));
    return cache[e];
  };

  LaurentPolynomial numerator(n);
  for (unsigned long step = 0; step <= d; ++step) {
    LaurentPolynomial term = LaurentPolynomial::constant(n, 1);
    for (std::size_t i = 0; i < n; ++i) {
      const Integer& b = s.matrix.at(i, kk);
      if (b == 0) continue;
      const Integer e = Integer(d) * positive_part(-b) + Integer(step) * b;
      if (e > 0) term = lp_mul(term, power(i, e.get_ui()));
    }
    numerator = lp_add(numerator, term);
  }

  Seed out = s;
  try {
    out.cluster[kk] = lp_div_exact(numerator, s.cluster[kk]);
  } catch (const NotDivisible&) {
    throw LaurentViolation("exchange numerator at direction " + std::to_string(k) +
                           " is not divisible by x" + std::to_string(k));
  }
  out.matrix = mutate_matrix(s.matrix, k, s.diagonal);
  return out;
}

Seed apply_word(Seed s, const MutationWord& w) {
  for (int k : w) s = mutate_seed(s, k);
  return s;
}

std::array<Rational, 3> specialize_ones(const Seed& s) {
  if (s.cluster.size() != 3) throw WrongShape("specialize_ones needs a rank-3 seed");
  const std::vector<Rational> ones(3, Rational(1));
  return {lp_eval(s.cluster[0], ones), lp_eval(s.cluster[1], ones), lp_eval(s.cluster[2], ones)};
}

std::vector<MutationWord> t3_words(int max_depth) {
  const std::size_t max_len = max_path_length(max_depth);
  std::vector<MutationWord> out{{}};
  std::size_t begin = 0;
  for (std::size_t len = 0; len < max_len; ++len) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i) {
      const MutationWord w = out[i];
      if (len == 0) {
        out.push_back({3});
      } else if (len == 1) {
        out.push_back({3, 2});
      } else {
        for (int k = 3; k >= 1; --k) {
          if (k == w.back()) continue;
          MutationWord c = w;
          c.push_back(k);
          out.push_back(std::move(c));
        }
      }
    }
    begin = end;
  }
  return out;
}

WalkReport walk_check(int max_depth, EquationKind kind) {
  WalkReport report;
  const auto nodes = enumerate(kind, max_depth);
  const auto words = t3_words(max_depth);
  if (nodes.size() != words.size()) {
    report.ok = false;
    report.detail = "tree has " + std::to_string(nodes.size()) + " vertices, T'3 walk has " +
                    std::to_string(words.size());
    return report;
  }

  // Seeds are built level by level from their parents; words[i]'s parent is the
  // word without its last letter, found by index since both lists are breadth-first.
  std::vector<std::optional<Seed>> seeds(words.size());
  seeds[0] = initial_seed(kind);
  std::vector<std::size_t> parent(words.size(), 0);
  {
    std::map<MutationWord, std::size_t> index;
    for (std::size_t i = 0; i < words.size(); ++i) index.emplace(words[i], i);
    for (std::size_t i = 1; i < words.size(); ++i) {
      parent[i] = index.at(MutationWord(words[i].begin(), words[i].end() - 1));
    }
  }
  const int threads = thread_budget();
  std::size_t begin = 1;
  while (begin < words.size()) {
    std::size_t end = begin;
    while (end < words.size() && words[end].size() == words[begin].size()) ++end;
    const auto count = static_cast<std::ptrdiff_t>(end - begin);
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (std::ptrdiff_t t = 0; t < count; ++t) {
      const std::size_t i = begin + static_cast<std::size_t>(t);
      seeds[i] = mutate_seed(*seeds[parent[i]], words[i].back());
    }
    begin = end;
  }

  for (std::size_t i = 0; i < words.size(); ++i) {
    ++report.vertices;
    const auto values = specialize_ones(*seeds[i]);
    const Triple& t = nodes[i].triple;
    const bool same = nodes[i].path == words[i] && values[0] == Rational(t.a) &&
                      values[1] == Rational(t.b) && values[2] == Rational(t.c);
    if (!same) {
      report.ok = false;
      report.offending_word = words[i];
      report.detail = "tree vertex " + t.str() + ", cluster specialization (" + values[0].str() + "," +
                      values[1].str() + "," + values[2].str() + ")";
      return report;
    }
  }
  return report;
}

namespace {

void walk_from(const Seed& s, MutationWord& word, std::size_t max_length, LaurentWalkReport& report) {
  ++report.seeds;
  if (word.size() == max_length) return;
  const int n = static_cast<int>(s.cluster.size());
  for (int k = 1; k <= n; ++k) {
    if (!word.empty() && word.back() == k) continue;
    word.push_back(k);
    auto describe = [&] {
      std::string w;
      for (int x : word) w += std::to_string(x);
      return w;
    };
    try {
      Seed child = mutate_seed(s, k);
      const auto& fresh = child.cluster[static_cast<std::size_t>(k - 1)];
      if (!lp_is_laurent_positive(fresh)) {
        ++report.failures;
        report.details.push_back("word " + describe() + ": coefficient not positive");
      }
      ++report.involutions;
      if (!(mutate_seed(child, k) == s)) {
        ++report.failures;
        report.details.push_back("word " + describe() + ": mutating twice does not return");
      }
      walk_from(child, word, max_length, report);
    } catch (const LaurentViolation& e) {
      ++report.failures;
      report.details.push_back("word " + describe() + ": " + e.what());
    }
    word.pop_back();
  }
}

}  // namespace

LaurentWalkReport laurent_walk_serial(const Seed& root, std::size_t max_length) {
  LaurentWalkReport report;
  MutationWord word;
  walk_from(root, word, max_length, report);
  return report;
}

LaurentWalkReport laurent_walk(const Seed& root, std::size_t max_length) {
  if (max_length < 2) return laurent_walk_serial(root, max_length);
  const int n = static_cast<int>(root.cluster.size());

  // Length-1 seeds are checked here; each length-2 prefix is an independent subtree.
  LaurentWalkReport report;
  ++report.seeds;
  std::vector<std::pair<MutationWord, Seed>> prefixes;
  for (int k = 1; k <= n; ++k) {
    Seed child = mutate_seed(root, k);
    ++report.seeds;
    ++report.involutions;
    if (!lp_is_laurent_positive(child.cluster[static_cast<std::size_t>(k - 1)]) || !(mutate_seed(child, k) == root)) {
      ++report.failures;
      report.details.push_back("word " + std::to_string(k) + ": first mutation fails");
    }
    for (int j = 1; j <= n; ++j) {
      if (j != k) prefixes.emplace_back(MutationWord{k, j}, child);
    }
  }

  std::vector<LaurentWalkReport> partial(prefixes.size());
  const auto count = static_cast<std::ptrdiff_t>(prefixes.size());
#pragma omp parallel for schedule(dynamic) num_threads(thread_budget())
  for (std::ptrdiff_t t = 0; t < count; ++t) {
    auto& [word, parent] = prefixes[static_cast<std::size_t>(t)];
    auto& out = partial[static_cast<std::size_t>(t)];
    const int k = word.back();
    try {
      Seed child = mutate_seed(parent, k);
      ++out.involutions;
      if (!lp_is_laurent_positive(child.cluster[static_cast<std::size_t>(k - 1)]) ||
          !(mutate_seed(child, k) == parent)) {
        ++out.failures;
        out.details.push_back("word " + std::to_string(word[0]) + std::to_string(k) + ": mutation fails");
      }
      MutationWord w = word;
      walk_from(child, w, max_length, out);
    } catch (const LaurentViolation& e) {
      ++out.failures;
      out.details.push_back(e.what());
    }
  }
  for (auto& p : partial) {
    report.seeds += p.seeds;
    report.involutions += p.involutions;
    report.failures += p.failures;
    report.details.insert(report.details.end(), p.details.begin(), p.details.end());
  }
  return report;
}

}  // namespace markov12
