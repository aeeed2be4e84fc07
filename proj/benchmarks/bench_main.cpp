#include <benchmark/benchmark.h>

#include "dilink/connectivity.hpp"
#include "dilink/dominators.hpp"
#include "dilink/generators.hpp"
#include "dilink/semicomplete_linkage.hpp"

using namespace dilink;

static void BM_Kappa(benchmark::State& state) {
  Digraph t = random_tournament(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(kappa(t));
}
BENCHMARK(BM_Kappa)->Arg(50)->Arg(100)->Arg(200);

static void BM_IsKStrong(benchmark::State& state) {
  Digraph t = random_tournament(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(is_k_strong(t, 6));
}
BENCHMARK(BM_IsKStrong)->Arg(100)->Arg(200)->Arg(400);

static void BM_NearlyInDominating(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Digraph t = random_tournament(n, 2);
  for (auto _ : state) {
    const Vertex u = nearly_in_dominating_vertex(t);
    benchmark::DoNotOptimize(verify_nearly_in_dominating(t, u, static_cast<int>(n)));
  }
}
BENCHMARK(BM_NearlyInDominating)->Arg(60)->Arg(200);

static void BM_SolveSemicomplete(benchmark::State& state) {
  Digraph t = random_tournament(200, 3);
  // Reversed pairs keep the direct-arc shortcut out of the measurement.
  std::vector<TerminalPair> pairs{{0, 1}, {2, 3}};
  for (auto& p : pairs) {
    if (t.has_arc(p.source, p.target)) std::swap(p.source, p.target);
  }
  const bool audit = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(solve_semicomplete(t, pairs, {audit}));
}
BENCHMARK(BM_SolveSemicomplete)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
