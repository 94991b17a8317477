#include "sigsel/sim/profile.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "sigsel/error.hpp"

namespace sigsel::sim {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Smallest value a simulated QoS sample may take.
constexpr double kFloorFraction = 1e-6;

double noisy(double clean, double noise_std, std::mt19937_64& rng) {
  if (noise_std == 0.0) return clean;
  std::normal_distribution<double> eps(0.0, noise_std);
  return std::max(clean * (1.0 + eps(rng)), clean * kFloorFraction);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> path) {
  std::uint64_t h = splitmix64(seed);
  for (const std::uint64_t p : path) h = splitmix64(h ^ splitmix64(p + 0x632be59bd9b4e019ULL));
  return h;
}

double ProviderProfile::base(Level level, const std::string& attribute) const {
  const auto lv = base_perf.find(level);
  if (lv == base_perf.end()) {
    throw Error(ErrorKind::AttributeMismatch,
                "profile '" + provider_id + "' has no base performance for level " +
                    std::string(to_string(level)));
  }
  const auto it = lv->second.find(attribute);
  if (it == lv->second.end()) {
    throw Error(ErrorKind::AttributeMismatch,
                "profile '" + provider_id + "' has no base performance for '" + attribute + "'");
  }
  return it->second;
}

void ProviderProfile::validate() const {
  if (seasonal.empty()) throw Error(ErrorKind::NoAttributes, "profile '" + provider_id + "' has no attributes");
  if (!(noise_std >= 0.0)) throw Error(ErrorKind::InvalidArgument, "noise_std must be non-negative");
  for (const auto& [name, series] : seasonal) {
    for (const double f : series.values()) {
      if (!(f > 0.0)) {
        throw Error(ErrorKind::InvalidArgument, "seasonal factors of '" + name + "' must be positive");
      }
    }
    for (const Level level : {Level::Low, Level::Medium, Level::High}) {
      if (!(base(level, name) > 0.0)) {
        throw Error(ErrorKind::InvalidArgument, "base performance of '" + name + "' must be positive");
      }
    }
  }
}

TimeSeries seasonal_factors(const SeasonalShape& shape, std::size_t horizon) {
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  std::vector<double> out(horizon);
  for (std::size_t i = 0; i < horizon; ++i) {
    const double t = static_cast<double>(i + 1);
    double f = 1.0 + shape.weekly_amplitude * std::sin(kTwoPi * t / 7.0 + shape.weekly_phase) +
               shape.annual_amplitude * std::sin(kTwoPi * t / shape.annual_period + shape.annual_phase);
    for (const auto& step : shape.steps) {
      if (static_cast<Timestamp>(i + 1) >= step.at) f *= step.factor;
    }
    if (!(f > 0.0)) {
      throw Error(ErrorKind::InvalidArgument, "seasonal shape drives a factor to zero or below");
    }
    out[i] = f;
  }
  return TimeSeries(std::move(out), 1);
}

QoSMatrix ground_truth_performance(const ProviderProfile& profile, const WorkloadSeries& workload,
                                   const LevelThresholds& thresholds, std::uint64_t stream) {
  const Timestamp first = workload.demands().start_index();
  const Timestamp last = first + static_cast<Timestamp>(workload.size()) - 1;
  if (first < 1 || last > static_cast<Timestamp>(profile.horizon())) {
    std::ostringstream os;
    os << "profile '" << profile.provider_id << "' covers [1, " << profile.horizon()
       << "] but the workload spans [" << first << ", " << last << "]";
    throw Error(ErrorKind::HorizonMismatch, os.str());
  }
  std::vector<Level> levels(workload.size());
  for (std::size_t i = 0; i < workload.size(); ++i) {
    levels[i] = level_of(workload[i], workload.capacity(), thresholds);
  }
  std::mt19937_64 rng(derive_seed(profile.rng_seed, {0x7275746800ULL, stream}));
  QoSMatrix out;
  for (const auto& [name, factors] : profile.seasonal) {
    std::vector<double> values(workload.size());
    for (std::size_t i = 0; i < workload.size(); ++i) {
      const Timestamp t = first + static_cast<Timestamp>(i);
      values[i] = noisy(profile.base(levels[i], name) * factors.at_time(t), profile.noise_std, rng);
    }
    out.insert(name, TimeSeries(std::move(values), first));
  }
  return out;
}

TrialExperience simulate_trial(const ProviderProfile& profile, const TrialPlan& plan,
                               Timestamp trial_start, std::uint64_t stream) {
  if (plan.entries.empty()) throw Error(ErrorKind::EmptyPlan, "cannot simulate an empty trial plan");
  const Timestamp trial_end = trial_start + static_cast<Timestamp>(plan.trial_length) - 1;
  if (trial_start < 1 || trial_end > static_cast<Timestamp>(profile.horizon())) {
    std::ostringstream os;
    os << "trial window [" << trial_start << ", " << trial_end << "] is outside profile '"
       << profile.provider_id << "' horizon [1, " << profile.horizon() << "]";
    throw Error(ErrorKind::WindowMismatch, os.str());
  }

  TrialExperience exp;
  exp.provider_id = profile.provider_id;
  exp.plan = plan;
  exp.trial_start = trial_start;
  std::mt19937_64 rng(derive_seed(profile.rng_seed, {0x747269616cULL, stream}));
  for (std::size_t vm = 0; vm < plan.vm_count; ++vm) {
    QoSMatrix observed;
    for (const auto& [name, factors] : profile.seasonal) {
      std::vector<double> values(plan.trial_length, 0.0);
      for (const TrialEntry& e : plan.entries) {
        if (e.vm != vm) continue;
        const Timestamp at = exp.executed_at(e);
        values[e.slot - 1] = noisy(profile.base(e.level, name) * factors.at_time(at), profile.noise_std, rng);
      }
      observed.insert(name, TimeSeries(std::move(values), trial_start));
    }
    exp.observed.push_back(std::move(observed));
  }
  return exp;
}

std::vector<Window> tile_windows(std::size_t period, std::size_t length) {
  if (length == 0) throw Error(ErrorKind::InvalidArgument, "window length must be positive");
  std::vector<Window> out;
  for (std::size_t start = 1; start <= period; start += length) {
    const std::size_t end = std::min(period, start + length - 1);
    out.push_back({static_cast<Timestamp>(start), static_cast<Timestamp>(end)});
  }
  return out;
}

IaaSSignature build_signature_from_history(const ProviderProfile& profile, const HistorySpec& history) {
  if (history.windows.empty() || history.user_count == 0) {
    throw Error(ErrorKind::InvalidArgument, "history needs at least one user and one window");
  }
  std::vector<TrialObservation> observations;
  observations.reserve(history.user_count);
  for (std::size_t u = 0; u < history.user_count; ++u) {
    const Window w = history.windows[u % history.windows.size()];
    if (!w.within(1, static_cast<Timestamp>(profile.horizon()))) {
      throw Error(ErrorKind::OutOfRange, "history window outside the profile horizon");
    }
    std::mt19937_64 rng(derive_seed(history.seed, {u}));
    TrialObservation obs;
    obs.user_id = "user-" + std::to_string(u + 1);
    obs.window = w;
    for (const auto& [name, factors] : profile.seasonal) {
      const double base = profile.base(history.reference_level, name);
      std::vector<double> values;
      values.reserve(w.length());
      for (Timestamp t = w.start; t <= w.end; ++t) {
        values.push_back(noisy(base * factors.at_time(t), profile.noise_std, rng));
      }
      obs.observed.insert(name, TimeSeries(std::move(values), w.start));
    }
    observations.push_back(std::move(obs));
  }
  return generate_signature(profile.provider_id, observations, profile.horizon());
}

}  // namespace sigsel::sim
