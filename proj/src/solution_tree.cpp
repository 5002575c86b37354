#include "markov12/solution_tree.hpp"

#include <omp.h>

#include <algorithm>
#include <deque>

#include "markov12/errors.hpp"
#include "markov12/parallel.hpp"

namespace markov12 {

std::string_view kind_name(EquationKind kind) {
  return kind == EquationKind::Twelve ? "twelve" : "markov";
}

EquationKind parse_kind(std::string_view name) {
  if (name == "twelve") return EquationKind::Twelve;
  if (name == "markov") return EquationKind::Markov;
  throw ParseError("unknown equation kind '" + std::string(name) + "'");
}

const Integer& Triple::at(int position) const {
  switch (position) {
    case 1: return a;
    case 2: return b;
    case 3: return c;
    default: throw IndexOutOfRange("position " + std::to_string(position) + " not in 1..3");
  }
}

Integer& Triple::at(int position) {
  return const_cast<Integer&>(static_cast<const Triple&>(*this).at(position));
}

int Triple::max_position() const {
  if (a > b && a > c) return 1;
  if (b > a && b > c) return 2;
  if (c > a && c > b) return 3;
  return 0;
}

const Integer& Triple::max() const {
  if (a >= b && a >= c) return a;
  return b >= c ? b : c;
}

std::array<Integer, 3> Triple::sorted() const {
  std::array<Integer, 3> s{a, b, c};
  std::sort(s.begin(), s.end());
  return s;
}

std::string Triple::str() const {
  return "(" + a.get_str() + "," + b.get_str() + "," + c.get_str() + ")";
}

int depth_of_path_length(std::size_t length) {
  return static_cast<int>(length <= 2 ? length : length - 1);
}

std::size_t max_path_length(int max_depth) {
  if (max_depth < 0) throw IndexOutOfRange("negative depth");
  return max_depth <= 1 ? static_cast<std::size_t>(max_depth) : static_cast<std::size_t>(max_depth) + 1;
}

bool verify(const Triple& t, EquationKind kind) {
  if (t.a <= 0 || t.b <= 0 || t.c <= 0) return false;
  if (kind == EquationKind::Twelve) {
    const Integer lhs = (t.a + t.b) * (t.a + t.b) + (t.b + t.c) * (t.b + t.c) + (t.c + t.a) * (t.c + t.a);
    return lhs == 12 * t.a * t.b * t.c;
  }
  return t.a * t.a + t.b * t.b + t.c * t.c == 3 * t.a * t.b * t.c;
}

Triple mutate(const Triple& t, int k, EquationKind kind) {
  if (!verify(t, kind)) throw NotASolution(t.str() + " is not a " + std::string(kind_name(kind)) + " solution");
  const Integer& p = t.at(k % 3 + 1);
  const Integer& q = t.at((k + 1) % 3 + 1);
  const Integer& r = t.at(k);
  Integer next = kind == EquationKind::Twelve ? Integer(6 * p * q - p - q - r) : Integer(3 * p * q - r);
  if (next <= 0) throw NonPositiveResult("mutation of " + t.str() + " at " + std::to_string(k));
  Triple out = t;
  out.at(k) = std::move(next);
  return out;
}

Triple mutate_by_division(const Triple& t, int k) {
  if (!verify(t, EquationKind::Twelve)) throw NotASolution(t.str() + " is not a twelve solution");
  const Integer& p = t.at(k % 3 + 1);
  const Integer& q = t.at((k + 1) % 3 + 1);
  const Integer& r = t.at(k);
  const Integer num = p * p + q * q + p * q;
  if (!mpz_divisible_p(num.get_mpz_t(), r.get_mpz_t())) {
    throw NotDivisible(r.get_str() + " does not divide " + num.get_str());
  }
  Triple out = t;
  out.at(k) = num / r;
  return out;
}

TreeNode tree_root() { return TreeNode{Triple{1, 1, 1}, 0, {}}; }

std::vector<TreeNode> children(const TreeNode& node, EquationKind kind) {
  auto child = [&](int k) {
    TreeNode c{mutate(node.triple, k, kind), 0, node.path};
    c.path.push_back(k);
    c.depth = depth_of_path_length(c.path.size());
    return c;
  };
  if (node.path.empty()) return {child(3)};
  if (node.path.size() == 1) return {child(2)};
  const int top = node.triple.max_position();
  if (top == 0) throw InternalInconsistency("tied maximum at " + node.triple.str() + " below the root chain");
  std::vector<TreeNode> out;
  for (int k = 3; k >= 1; --k) {
    if (k != top) out.push_back(child(k));
  }
  return out;
}

namespace {

bool within(const TreeNode& n, const std::optional<Integer>& max_value) {
  return !max_value || n.triple.max() <= *max_value;
}

}  // namespace

std::vector<TreeNode> enumerate_serial(EquationKind kind, int max_depth,
                                       const std::optional<Integer>& max_value) {
  const std::size_t max_len = max_path_length(max_depth);
  std::vector<TreeNode> out;
  std::deque<TreeNode> queue;
  if (within(tree_root(), max_value)) queue.push_back(tree_root());
  while (!queue.empty()) {
    TreeNode n = std::move(queue.front());
    queue.pop_front();
    if (n.path.size() < max_len) {
      for (auto& c : children(n, kind)) {
        if (within(c, max_value)) queue.push_back(std::move(c));
      }
    }
    out.push_back(std::move(n));
  }
  return out;
}

std::vector<TreeNode> enumerate(EquationKind kind, int max_depth, const std::optional<Integer>& max_value) {
  const std::size_t max_len = max_path_length(max_depth);
  std::vector<TreeNode> out;
  std::vector<TreeNode> level;
  if (within(tree_root(), max_value)) level.push_back(tree_root());
  const int threads = thread_budget();
  for (std::size_t len = 0; !level.empty(); ++len) {
    if (len == max_len) {
      std::move(level.begin(), level.end(), std::back_inserter(out));
      break;
    }
    std::vector<std::vector<TreeNode>> next(level.size());
    const auto count = static_cast<std::ptrdiff_t>(level.size());
#pragma omp parallel for schedule(static) num_threads(threads) if (count > 64)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
      for (auto& c : children(level[static_cast<std::size_t>(i)], kind)) {
        if (within(c, max_value)) next[static_cast<std::size_t>(i)].push_back(std::move(c));
      }
    }
    std::move(level.begin(), level.end(), std::back_inserter(out));
    level.clear();
    for (auto& group : next) std::move(group.begin(), group.end(), std::back_inserter(level));
  }
  return out;
}

bool is_singular(const Triple& t) { return t.a == t.b || t.b == t.c || t.a == t.c; }

Descent descend(const Triple& t, EquationKind kind) {
  if (!verify(t, kind)) throw NotASolution(t.str() + " is not a " + std::string(kind_name(kind)) + " solution");
  Descent d;
  d.triples.push_back(t);
  while (!is_singular(d.triples.back())) {
    const int k = d.triples.back().max_position();
    d.positions.push_back(k);
    d.triples.push_back(mutate(d.triples.back(), k, kind));
  }
  return d;
}

bool pairwise_coprime(const Triple& t) {
  return gcd(t.a, t.b) == 1 && gcd(t.b, t.c) == 1 && gcd(t.a, t.c) == 1;
}

std::vector<Integer> a101368_extend(std::vector<Integer> prefix, std::size_t count) {
  if (prefix.size() < 2) throw WrongShape("A101368 prefix needs at least two terms");
  for (std::size_t i = 0; i < count; ++i) {
    const Integer& last = prefix[prefix.size() - 1];
    const Integer& before = prefix[prefix.size() - 2];
    const Integer num = last * last + last + 1;
    if (before == 0 || !mpz_divisible_p(num.get_mpz_t(), before.get_mpz_t())) {
      throw NotDivisible(before.get_str() + " does not divide " + num.get_str());
    }
    prefix.push_back(num / before);
  }
  return prefix;
}

bool divisibility_check(const Triple& t) {
  if (t.a != 1) throw WrongShape(t.str() + " does not start with 1");
  const Integer fb = 1 + t.b + t.b * t.b;
  const Integer fc = 1 + t.c + t.c * t.c;
  return mpz_divisible_p(fc.get_mpz_t(), t.b.get_mpz_t()) != 0 &&
         mpz_divisible_p(fb.get_mpz_t(), t.c.get_mpz_t()) != 0;
}

}  // namespace markov12
