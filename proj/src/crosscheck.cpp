#include "markov12/crosscheck.hpp"

#include <map>

#include "markov12/errors.hpp"
#include "markov12/farey.hpp"
#include "markov12/snake_graph.hpp"

namespace markov12 {

CrossCheckReport crosscheck(int max_depth, bool inject_fault) {
  if (max_depth < 0) throw WrongShape("depth must be nonnegative");
  const EquationKind kind = EquationKind::Twelve;
  std::map<MutationWord, Triple> tree;
  for (auto& node : enumerate(kind, max_depth)) tree.emplace(node.path, std::move(node.triple));

  std::map<MutationWord, std::pair<Seed, farey::Triangulation>> state;
  state.emplace(MutationWord{}, std::make_pair(initial_seed(kind), farey::Triangulation::initial()));

  CrossCheckReport report;
  const auto words = t3_words(max_depth);
  for (std::size_t w = 0; w < words.size(); ++w) {
    const MutationWord& word = words[w];
    if (!word.empty() && !state.contains(word)) {
      const auto& [seed, tri] = state.at(MutationWord(word.begin(), word.end() - 1));
      state.emplace(word, std::make_pair(mutate_seed(seed, word.back()), tri.flip(word.back())));
    }
    const auto& [seed, tri] = state.at(word);
    const auto found = tree.find(word);
    if (found == tree.end()) throw InternalInconsistency("T'_3 word missing from the solution tree");

    CrossCheckRow row;
    row.word = word;
    row.tree = found->second;
    if (inject_fault && w + 1 == words.size()) row.tree.a += 1;
    row.cluster = specialize_ones(seed);
    row.agree = true;
    for (int k = 1; k <= 3; ++k) {
      const auto i = static_cast<std::size_t>(k - 1);
      const ArcDescriptor arc = tri.arc(k);
      const SnakeGraph g = build_snake_graph(arc);
      row.matchings[i] = count_matchings(g);
      row.cf_numerators[i] = evaluate_cf(continued_fraction(g)).numerator();
      const Integer& t = row.tree.at(k);
      row.agree = row.agree && row.cluster[i] == Rational(t) && row.matchings[i] == t && row.cf_numerators[i] == t;
    }
    if (!row.agree && report.ok) {
      report.ok = false;
      std::string path;
      for (int k : word) path += (path.empty() ? "" : ",") + std::to_string(k);
      report.detail = "word [" + path + "]: tree " + row.tree.str() + ", cluster (" + row.cluster[0].str() + ',' +
                      row.cluster[1].str() + ',' + row.cluster[2].str() + "), matchings (" +
                      to_string(row.matchings[0]) + ',' + to_string(row.matchings[1]) + ',' +
                      to_string(row.matchings[2]) + "), continued fractions (" + to_string(row.cf_numerators[0]) +
                      ',' + to_string(row.cf_numerators[1]) + ',' + to_string(row.cf_numerators[2]) + ')';
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace markov12
