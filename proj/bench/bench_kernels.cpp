// Serial reference against OpenMP kernel for each parallel entry point.
// Worker count follows OMP_NUM_THREADS / MARKOV12_THREADS.

#include <benchmark/benchmark.h>

#include "markov12/cluster.hpp"
#include "markov12/farey.hpp"
#include "markov12/snake_graph.hpp"
#include "markov12/solution_tree.hpp"

using namespace markov12;

namespace {

// Loop of the triangulation reached by flipping 3,2,1,3, the one with most matchings.
SnakeGraph large_snake() {
  auto t = farey::Triangulation::initial();
  for (int k : {3, 2, 1, 3}) t = t.flip(k);
  SnakeGraph best = build_snake_graph(t.arc(1));
  for (int k = 2; k <= 3; ++k) {
    SnakeGraph g = build_snake_graph(t.arc(k));
    if (count_matchings(g) > count_matchings(best)) best = std::move(g);
  }
  return best;
}

void BM_enumerate_serial(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(enumerate_serial(EquationKind::Twelve, static_cast<int>(s.range(0))));
}
void BM_enumerate_parallel(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(enumerate(EquationKind::Twelve, static_cast<int>(s.range(0))));
}
BENCHMARK(BM_enumerate_serial)->Arg(14)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_enumerate_parallel)->Arg(14)->Arg(16)->Unit(benchmark::kMillisecond);

const Integer kCensusBound("1000000000000000000000000000000");
void BM_census_serial(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(max_multiplicity_census_serial(EquationKind::Twelve, kCensusBound));
}
void BM_census_parallel(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(max_multiplicity_census(EquationKind::Twelve, kCensusBound));
}
BENCHMARK(BM_census_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_census_parallel)->Unit(benchmark::kMillisecond);

void BM_matchings_serial(benchmark::State& s) {
  const SnakeGraph g = large_snake();
  for (auto _ : s) benchmark::DoNotOptimize(count_matchings_by_enumeration_serial(g));
}
void BM_matchings_parallel(benchmark::State& s) {
  const SnakeGraph g = large_snake();
  for (auto _ : s) benchmark::DoNotOptimize(count_matchings_by_enumeration(g));
}
void BM_matchings_transfer(benchmark::State& s) {
  const SnakeGraph g = large_snake();
  for (auto _ : s) benchmark::DoNotOptimize(count_matchings(g));
}
BENCHMARK(BM_matchings_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_matchings_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_matchings_transfer)->Unit(benchmark::kMicrosecond);

void BM_laurent_walk_serial(benchmark::State& s) {
  const Seed root = initial_seed(EquationKind::Twelve);
  for (auto _ : s) benchmark::DoNotOptimize(laurent_walk_serial(root, static_cast<std::size_t>(s.range(0))));
}
void BM_laurent_walk_parallel(benchmark::State& s) {
  const Seed root = initial_seed(EquationKind::Twelve);
  for (auto _ : s) benchmark::DoNotOptimize(laurent_walk(root, static_cast<std::size_t>(s.range(0))));
}
BENCHMARK(BM_laurent_walk_serial)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_laurent_walk_parallel)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_lp_mul(benchmark::State& s) {
  const Seed seed = apply_word(initial_seed(EquationKind::Twelve), {3, 2, 1, 3, 2});
  const auto& p = seed.cluster[1];
  const auto& q = seed.cluster[2];
  for (auto _ : s) benchmark::DoNotOptimize(lp_mul(p, q));
}
BENCHMARK(BM_lp_mul)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
