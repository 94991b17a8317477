#include <benchmark/benchmark.h>

#include "sigsel/discovery.hpp"
#include "sigsel/sim/profile.hpp"
#include "sigsel/sim/scenario.hpp"

using namespace sigsel;

namespace {

struct Fixture {
  sim::SyntheticMarket market;
  IaaSSignature signature;
  TrialExperience experience;

  explicit Fixture(std::size_t trial_length) {
    market = sim::synthetic_market(sim::ScenarioSpec{}, sim::ZipfWorkloadSpec{}, 3);
    sim::HistorySpec history;
    history.windows = sim::tile_windows(360, 30);
    history.user_count = history.windows.size() * 3;
    signature = sim::build_signature_from_history(market.providers.front(), history);
    const auto plan = select_trial_workloads(market.workload, trial_length, Scheme::FG);
    experience = sim::simulate_trial(market.providers.front(), plan, 151);
  }
};

}  // namespace

static void BM_SpdDiscover(benchmark::State& state) {
  const Fixture f(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(spd_discover(f.market.workload, f.experience, f.signature));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(f.market.workload.size()));
}
BENCHMARK(BM_SpdDiscover)->Arg(10)->Arg(30)->Arg(90);

static void BM_LpdDiscover(benchmark::State& state) {
  const Fixture f(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lpd_discover(f.market.workload, f.experience));
}
BENCHMARK(BM_LpdDiscover)->Arg(30);

static void BM_SelectTrial(benchmark::State& state) {
  const Fixture f(30);
  const auto scheme = static_cast<Scheme>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(select_trial_workloads(f.market.workload, 30, scheme));
}
BENCHMARK(BM_SelectTrial)
    ->Arg(static_cast<int>(Scheme::FG))
    ->Arg(static_cast<int>(Scheme::RG))
    ->Arg(static_cast<int>(Scheme::MG));
