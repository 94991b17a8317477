#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "sigsel/confidence.hpp"
#include "sigsel/signature.hpp"
#include "sigsel/timeseries.hpp"
#include "sigsel/trial.hpp"

namespace sigsel::sim {

// Ground-truth provider model:
//   perf[attr][t] = base_perf[level(demand)][attr] * seasonal[attr][t] * (1 + eps),
//   eps ~ Normal(0, noise_std).
struct ProviderProfile {
  std::string provider_id;
  std::map<Level, std::map<std::string, double>> base_perf;
  QoSMatrix seasonal;  // multiplicative factors over [1, horizon]
  double noise_std = 0.0;
  std::uint64_t rng_seed = 0;

  std::vector<std::string> attributes() const { return seasonal.names(); }
  std::size_t horizon() const noexcept { return seasonal.length(); }
  double base(Level level, const std::string& attribute) const;

  // Throws InvalidArgument for non-positive factors or base values and
  // AttributeMismatch when a level lacks an attribute.
  void validate() const;
};

// splitmix64 over a path of integers; used to give every experiment cell an
// independent, order-free random stream.
std::uint64_t derive_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> path);

struct SeasonalShape {
  struct Step {
    Timestamp at = 1;     // first timestamp affected
    double factor = 1.0;  // multiplier applied from `at` onwards
  };

  double weekly_amplitude = 0.0;
  double weekly_phase = 0.0;  // radians
  double annual_amplitude = 0.0;
  double annual_phase = 0.0;  // radians
  double annual_period = 360.0;
  std::vector<Step> steps;
};

// (1 + weekly sinusoid + annual sinusoid) * step factors, over [1, horizon].
TimeSeries seasonal_factors(const SeasonalShape& shape, std::size_t horizon);

// Throws HorizonMismatch when the workload runs past the profile.
QoSMatrix ground_truth_performance(const ProviderProfile& profile, const WorkloadSeries& workload,
                                   const LevelThresholds& thresholds = {}, std::uint64_t stream = 0);

// Runs every plan entry at its trial day starting at trial_start.
// Throws EmptyPlan or WindowMismatch.
TrialExperience simulate_trial(const ProviderProfile& profile, const TrialPlan& plan,
                               Timestamp trial_start, std::uint64_t stream = 0);

// Consecutive windows of `length` days covering [1, period]; the last may be shorter.
std::vector<Window> tile_windows(std::size_t period, std::size_t length);

struct HistorySpec {
  std::size_t user_count = 0;       // user i observes windows[i % windows.size()]
  std::vector<Window> windows;
  Level reference_level = Level::Medium;  // level of the benchmark past users ran
  std::uint64_t seed = 0;
};

// Synthesizes past-user observations from the profile and aggregates them into
// a signature. Throws CoverageGapError when the windows leave holes.
IaaSSignature build_signature_from_history(const ProviderProfile& profile, const HistorySpec& history);

}  // namespace sigsel::sim
