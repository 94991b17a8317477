#include "sigsel/sim/scenario.hpp"

#include <numbers>
#include <random>

#include "sigsel/error.hpp"

namespace sigsel::sim {

namespace {

// Throughput-like baselines fall as the demand level rises.
std::map<Level, double> random_baselines(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> scale(80.0, 120.0);
  std::uniform_real_distribution<double> medium_ratio(0.75, 0.9);
  std::uniform_real_distribution<double> high_ratio(0.5, 0.7);
  const double low = scale(rng);
  return {{Level::Low, low}, {Level::Medium, low * medium_ratio(rng)}, {Level::High, low * high_ratio(rng)}};
}

SeasonalShape random_shape(std::mt19937_64& rng, double annual_amplitude, double weekly_amplitude,
                           std::size_t horizon) {
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
  std::uniform_real_distribution<double> jitter(0.9, 1.1);
  SeasonalShape shape;
  shape.annual_amplitude = annual_amplitude * jitter(rng);
  shape.annual_phase = phase(rng);
  shape.weekly_amplitude = weekly_amplitude * jitter(rng);
  shape.weekly_phase = phase(rng);
  shape.annual_period = static_cast<double>(horizon);
  return shape;
}

}  // namespace

ProviderProfile make_profile(std::string provider_id, const std::vector<std::string>& attributes,
                             const std::vector<SeasonalShape>& shapes,
                             const std::map<Level, double>& base_by_level, std::size_t horizon,
                             double noise_std, std::uint64_t rng_seed) {
  if (shapes.size() != attributes.size()) {
    throw Error(ErrorKind::InvalidArgument, "one seasonal shape per attribute is required");
  }
  ProviderProfile p;
  p.provider_id = std::move(provider_id);
  p.noise_std = noise_std;
  p.rng_seed = rng_seed;
  for (std::size_t a = 0; a < attributes.size(); ++a) {
    p.seasonal.insert(attributes[a], seasonal_factors(shapes[a], horizon));
    for (const auto& [level, base] : base_by_level) p.base_perf[level][attributes[a]] = base;
  }
  p.validate();
  return p;
}

std::vector<ProviderProfile> synthetic_providers(const ScenarioSpec& spec, std::uint64_t seed) {
  std::vector<ProviderProfile> out;
  const std::size_t total = spec.private_count + spec.public_count;
  for (std::size_t i = 0; i < total; ++i) {
    const bool is_public = i >= spec.private_count;
    std::mt19937_64 rng(derive_seed(seed, {0x70726f76ULL, i}));
    const double annual = is_public ? spec.public_annual_amplitude : spec.private_annual_amplitude;
    std::vector<SeasonalShape> shapes;
    for (std::size_t a = 0; a < spec.attributes.size(); ++a) {
      shapes.push_back(random_shape(rng, annual, spec.weekly_amplitude, spec.horizon));
    }
    const auto bases = random_baselines(rng);
    out.push_back(make_profile("p" + std::to_string(i + 1), spec.attributes, shapes, bases, spec.horizon,
                               is_public ? spec.public_noise : spec.private_noise,
                               derive_seed(seed, {0x6e6f697365ULL, i})));
  }
  return out;
}

ConsumerRequest synthetic_request(const WorkloadSeries& workload, const ScenarioSpec& spec,
                                  std::uint64_t seed, const LevelThresholds& thresholds) {
  std::mt19937_64 rng(derive_seed(seed, {0x72657175657374ULL}));
  std::vector<SeasonalShape> shapes;
  for (std::size_t a = 0; a < spec.attributes.size(); ++a) {
    shapes.push_back(random_shape(rng, spec.private_annual_amplitude, spec.weekly_amplitude, spec.horizon));
  }
  const ProviderProfile target =
      make_profile("request", spec.attributes, shapes, random_baselines(rng), spec.horizon, 0.0, 0);
  ConsumerRequest request;
  request.workload = workload;
  request.required_qos = ground_truth_performance(target, workload, thresholds);
  return request;
}

SyntheticMarket synthetic_market(const ScenarioSpec& spec, ZipfWorkloadSpec workload_spec, std::uint64_t seed,
                                 const LevelThresholds& thresholds) {
  workload_spec.horizon = spec.horizon;
  SyntheticMarket market;
  market.workload = zipf_workload(workload_spec, derive_seed(seed, {kWorkloadStream}));
  market.request = synthetic_request(market.workload, spec, derive_seed(seed, {kRequestStream}), thresholds);
  market.providers = synthetic_providers(spec, derive_seed(seed, {kProviderStream}));
  return market;
}

}  // namespace sigsel::sim
