// Serial reference against the OpenMP kernels.

#include <benchmark/benchmark.h>

#include "scknot/closure.hpp"
#include "scknot/invariants.hpp"
#include "scknot/random.hpp"
#include "scknot/search.hpp"
#include "scknot/suites.hpp"

using namespace scknot;

namespace {

// A closure with exactly `c` crossings before simplification, or the largest found below it.
LongKnotDiagram diagram_with(int c) {
  Rng rng(7);
  LongKnotDiagram best;
  for (int k = 0; k < 2000; ++k) {
    const LongKnotDiagram d = short_circuit_close(random_pure_braid(rng, 5, static_cast<std::size_t>(c)));
    if (d.crossing_count() <= c && d.crossing_count() > best.crossing_count()) best = d;
    if (best.crossing_count() == c) break;
  }
  return best;
}

Execution exec_of(const benchmark::State& state) {
  return state.range(1) == 0 ? Execution::serial : Execution::parallel;
}

void BM_BracketExhaustive(benchmark::State& state) {
  const LongKnotDiagram d = diagram_with(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kauffman_bracket_exhaustive(d, exec_of(state)));
  state.counters["crossings"] = d.crossing_count();
}
BENCHMARK(BM_BracketExhaustive)->ArgsProduct({{10, 14, 18}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_BracketSweep(benchmark::State& state) {
  const LongKnotDiagram d = diagram_with(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kauffman_bracket(d));
  state.counters["crossings"] = d.crossing_count();
}
BENCHMARK(BM_BracketSweep)->Arg(10)->Arg(14)->Arg(18)->Unit(benchmark::kMillisecond);

void BM_Suite(benchmark::State& state) {
  const std::string& name = suite_names()[static_cast<std::size_t>(state.range(0))];
  state.SetLabel(name);
  for (auto _ : state) benchmark::DoNotOptimize(run_suite(name, 1, 50, exec_of(state)));
}
BENCHMARK(BM_Suite)->ArgsProduct({{0, 1, 2, 3, 4}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_Search(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_closures(3, static_cast<int>(state.range(0)), kDefaultCrossingCap, exec_of(state)));
}
BENCHMARK(BM_Search)->ArgsProduct({{3, 4}, {0, 1}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
