#include <benchmark/benchmark.h>

#include <proxyvote/orders.hpp>

using namespace proxyvote;

static void BM_TransitiveClosureChain(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  std::vector<Edge> chain;
  for (int k = 0; k + 1 < m; ++k) chain.push_back({k, k + 1});
  for (auto _ : state) {
    benchmark::DoNotOptimize(transitive_closure(chain, m));
  }
}
BENCHMARK(BM_TransitiveClosureChain)->DenseRange(3, 8);

static void BM_LinearExtensionsOfEmpty(benchmark::State& state) {
  const PartialOrder empty(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(linear_extensions(empty));
  }
}
BENCHMARK(BM_LinearExtensionsOfEmpty)->DenseRange(3, 7);

static void BM_EnumeratePartialOrders(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_partial_orders(m));
  }
}
BENCHMARK(BM_EnumeratePartialOrders)->DenseRange(2, 4)->Unit(benchmark::kMicrosecond);

static void BM_GuidedExtension(benchmark::State& state) {
  const PartialOrder p = make_partial_order(std::vector<Edge>{{0, 1}, {2, 3}}, 5);
  const LinearOrder guide{4, 3, 2, 1, 0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(guided_extension(p, guide));
  }
}
BENCHMARK(BM_GuidedExtension);
