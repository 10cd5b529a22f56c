#include <benchmark/benchmark.h>

#include "lazyburn/burn.hpp"
#include "lazyburn/force.hpp"
#include "lazyburn/generate.hpp"
#include "lazyburn/solve.hpp"

using namespace lazyburn;

namespace {

void BM_Core(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto h = gen_random_hypergraph(n, 2 * n, 2, 4, 1);
  for (auto _ : state) benchmark::DoNotOptimize(core(h));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * h.num_pins()));
}
BENCHMARK(BM_Core)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)->Unit(benchmark::kMillisecond);

// Mixed sizes with singletons, so that peeling actually runs deep.
void BM_CorePeeling(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto h = gen_random_hypergraph(n, n, 1, 3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(core(h));
}
BENCHMARK(BM_CorePeeling)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)->Unit(benchmark::kMillisecond);

void BM_Propagate(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto h = gen_random_hypergraph(n, n, 2, 4, 3);
  VertexSet seed;
  for (Vertex v = 0; v < n; v += 3) seed.insert(v);
  for (auto _ : state) benchmark::DoNotOptimize(propagate(h, seed, Model::spontaneous));
}
BENCHMARK(BM_Propagate)->RangeMultiplier(4)->Range(1 << 8, 1 << 14);

void BM_SolveStar(benchmark::State& state) {
  const auto h = gen_star_hypergraph(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(b_lazy(h, Model::spontaneous));
}
BENCHMARK(BM_SolveStar)->ArgsProduct({{2, 3, 4}, {2, 4, 6}});

void BM_SolveRandom(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto h = gen_random_hypergraph(n, n, 2, 4, 4);
  for (auto _ : state) benchmark::DoNotOptimize(b_lazy(h, Model::spontaneous));
}
BENCHMARK(BM_SolveRandom)->DenseRange(10, 30, 10)->Unit(benchmark::kMicrosecond);

void BM_Z0Exact(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto g = gen_random_graph(n, 2 * n, 5);
  for (auto _ : state) benchmark::DoNotOptimize(z0_exact(g, 64));
}
BENCHMARK(BM_Z0Exact)->DenseRange(8, 20, 4)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
