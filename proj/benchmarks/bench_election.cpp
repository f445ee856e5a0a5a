#include <benchmark/benchmark.h>

#include <proxyvote/election.hpp>
#include <proxyvote/enumeration.hpp>

using namespace proxyvote;

namespace {

// Voter v holds a growing prefix of a>b>c and ranks the next voter first,
// so delegation forms one long chain.
ProxyVoteProfile chain_profile(int n) {
  ProxyVoteProfile pvp;
  const LinearOrder abc{0, 1, 2};
  for (int v = 0; v < n; ++v) {
    pvp.P.push_back(v + 1 == n ? abc.to_partial_order()
                               : make_partial_order(std::vector<Edge>{{0, 1}}, 3));
    std::vector<int> s;
    for (int k = 1; k <= n; ++k) s.push_back((v + k) % n);
    pvp.S.push_back(LinearOrder(s));
    pvp.D.push_back(abc);
  }
  return pvp;
}

}  // namespace

static void BM_RunProxyVoteChain(benchmark::State& state) {
  const ProxyVoteProfile pvp = chain_profile(static_cast<int>(state.range(0)));
  const Rule borda = borda_rule(3, LinearOrder{0, 1, 2});
  const MechanismSpec g = MechanismSpec::of(MechanismKind::Subset);
  ElectionEvaluator eval(borda, g);
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval.winner(pvp));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_RunProxyVoteChain)->RangeMultiplier(2)->Range(4, 64);

static void BM_ScoringWinner(benchmark::State& state) {
  const auto orders = enumerate_linear_orders(4);
  std::vector<LinearOrder> ballots;
  for (int v = 0; v < state.range(0); ++v) ballots.push_back(orders[(v * 7) % orders.size()]);
  const ScoringRule rule = ScoringRule::borda(4, LinearOrder{0, 1, 2, 3});
  for (auto _ : state) {
    benchmark::DoNotOptimize(scoring_winner(rule, ballots));
  }
}
BENCHMARK(BM_ScoringWinner)->RangeMultiplier(4)->Range(4, 256);

static void BM_WalkProxyProfiles(benchmark::State& state) {
  const ProxyProfileSpace space(3, 3);
  const MechanismSpec g = MechanismSpec::of(MechanismKind::Subset);
  ElectionEvaluator eval(g);
  for (auto _ : state) {
    std::size_t cycles = 0;
    space.walk_chunk(7, [&](const ProxyVoteProfile& pvp) {
      cycles += eval.gurus(pvp).cycle_members.size();
      return false;
    });
    benchmark::DoNotOptimize(cycles);
  }
}
BENCHMARK(BM_WalkProxyProfiles)->Unit(benchmark::kMillisecond);
