#include <benchmark/benchmark.h>

#include <proxyvote/axioms.hpp>
#include <proxyvote/manipulation.hpp>

using namespace proxyvote;

static void BM_CheckZrSubset(benchmark::State& state) {
  const MechanismSpec g = MechanismSpec::of(MechanismKind::Subset);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_zr(g, n, 3).passed);
  }
}
BENCHMARK(BM_CheckZrSubset)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_CheckPvamBordaSubset(benchmark::State& state) {
  const Rule borda = borda_rule(3, LinearOrder{0, 1, 2});
  const MechanismSpec g = MechanismSpec::of(MechanismKind::Subset);
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_pvam(borda, g, 2, 3).passed);
  }
}
BENCHMARK(BM_CheckPvamBordaSubset)->Unit(benchmark::kMillisecond);

static void BM_CheckIip(benchmark::State& state) {
  const MechanismSpec g = MechanismSpec::of(MechanismKind::SubsetIfAllLinearAgree);
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_iip(g, 3, 3).passed);
  }
}
BENCHMARK(BM_CheckIip)->Unit(benchmark::kMillisecond);

static void BM_FindGsBorda(benchmark::State& state) {
  const Rule borda = borda_rule(3, LinearOrder{0, 1, 2});
  for (auto _ : state) {
    benchmark::DoNotOptimize(find_gs(borda, 3, 3).has_value());
  }
}
BENCHMARK(BM_FindGsBorda)->Unit(benchmark::kMillisecond);
