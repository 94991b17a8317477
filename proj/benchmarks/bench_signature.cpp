#include <benchmark/benchmark.h>

#include "sigsel/sim/profile.hpp"
#include "sigsel/sim/scenario.hpp"

using namespace sigsel;

// Past-user history over a year, `users` observations per 30-day window.
static void BM_SignatureFromHistory(benchmark::State& state) {
  const auto providers = sim::synthetic_providers(sim::ScenarioSpec{}, 7);
  sim::HistorySpec history;
  history.windows = sim::tile_windows(360, 30);
  history.user_count = history.windows.size() * static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sim::build_signature_from_history(providers.front(), history));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(history.user_count));
}
BENCHMARK(BM_SignatureFromHistory)->Arg(1)->Arg(3)->Arg(30);

static void BM_GenerateSignature(benchmark::State& state) {
  const auto period = static_cast<std::size_t>(state.range(0));
  std::vector<TrialObservation> history;
  for (std::size_t start = 1; start <= period; start += 30) {
    const std::size_t len = std::min<std::size_t>(30, period - start + 1);
    TrialObservation o;
    o.user_id = "u" + std::to_string(start);
    o.window = {static_cast<Timestamp>(start), static_cast<Timestamp>(start + len - 1)};
    std::vector<double> v(len);
    for (std::size_t i = 0; i < len; ++i) v[i] = 100.0 + static_cast<double>((start + i) % 7);
    o.observed.insert("cpu", TimeSeries(v, o.window.start));
    o.observed.insert("net", TimeSeries(v, o.window.start));
    history.push_back(std::move(o));
  }
  for (auto _ : state) benchmark::DoNotOptimize(generate_signature("p", history, period));
}
BENCHMARK(BM_GenerateSignature)->Arg(360)->Arg(3600);
