#include <benchmark/benchmark.h>

#include "sigsel/sim/experiment.hpp"
#include "sigsel/sim/scenario.hpp"

using namespace sigsel;

// Default market and config; the argument is the worker thread count.
static void BM_Experiment(benchmark::State& state) {
  const auto market = sim::synthetic_market(sim::ScenarioSpec{}, sim::ZipfWorkloadSpec{}, 1);
  sim::ExperimentConfig config;
  config.threads = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sim::run_experiment(config, market.request, market.providers));
}
BENCHMARK(BM_Experiment)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
