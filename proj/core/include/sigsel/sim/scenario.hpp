#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "sigsel/ranking.hpp"
#include "sigsel/sim/profile.hpp"
#include "sigsel/sim/workload.hpp"

namespace sigsel::sim {

// Knobs for the synthetic provider market. "Private" providers are the
// well-isolated ones; "public" providers are noisier with stronger seasonality.
struct ScenarioSpec {
  std::size_t horizon = 360;
  std::size_t private_count = 5;
  std::size_t public_count = 2;
  double private_noise = 0.01;
  double public_noise = 0.05;
  double private_annual_amplitude = 0.20;
  double public_annual_amplitude = 0.30;
  double weekly_amplitude = 0.10;
  std::vector<std::string> attributes{"cpu_throughput", "net_throughput"};
};

// Providers p1..pN, private first. Everything is derived from `seed`.
std::vector<ProviderProfile> synthetic_providers(const ScenarioSpec& spec, std::uint64_t seed);

// Request whose required QoS is the noise-free performance of a target
// profile drawn from `seed` running the given workload.
ConsumerRequest synthetic_request(const WorkloadSeries& workload, const ScenarioSpec& spec,
                                  std::uint64_t seed, const LevelThresholds& thresholds = {});

// Noise-free profile with the given seasonal shapes (one per attribute, same
// order as spec.attributes) and level baselines.
ProviderProfile make_profile(std::string provider_id, const std::vector<std::string>& attributes,
                             const std::vector<SeasonalShape>& shapes,
                             const std::map<Level, double>& base_by_level, std::size_t horizon,
                             double noise_std, std::uint64_t rng_seed);

// derive_seed paths for the pieces of a synthetic run.
inline constexpr std::uint64_t kWorkloadStream = 0x776f726bULL;
inline constexpr std::uint64_t kRequestStream = 0x7265714bULL;
inline constexpr std::uint64_t kProviderStream = 0x70726f66ULL;

// Zipf consumer workload, its request and the provider market, each drawn from
// its own stream of `seed`.
struct SyntheticMarket {
  WorkloadSeries workload;
  ConsumerRequest request;
  std::vector<ProviderProfile> providers;
};
SyntheticMarket synthetic_market(const ScenarioSpec& spec, ZipfWorkloadSpec workload_spec, std::uint64_t seed,
                                 const LevelThresholds& thresholds = {});

}  // namespace sigsel::sim
