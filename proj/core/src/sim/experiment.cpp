#include "sigsel/sim/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <sstream>
#include <thread>

#include "sigsel/discovery.hpp"
#include "sigsel/error.hpp"
#include "sigsel/numeric.hpp"

namespace sigsel::sim {

void ExperimentConfig::validate() const {
  auto fail = [](const std::string& what) { throw Error(ErrorKind::InvalidArgument, what); };
  if (horizon_days == 0) fail("horizon_days must be positive");
  if (provider_count == 0) fail("provider_count must be positive");
  if (trial_length_days < 2) fail("trial_length_days must be at least 2");
  if (trial_start_day < 1 ||
      trial_start_day + static_cast<Timestamp>(trial_length_days) - 1 > static_cast<Timestamp>(horizon_days)) {
    fail("trial window must lie within the horizon");
  }
  if (schemes.empty()) fail("at least one trial scheme is required");
  if (std::find(schemes.begin(), schemes.end(), ranking_scheme) == schemes.end()) {
    fail("ranking_scheme must be one of the configured schemes");
  }
  if (confidence_threshold < -1.0 || confidence_threshold > 1.0) fail("confidence_threshold must lie in [-1, 1]");
  if (eq_vm_count == 0) fail("eq_vm_count must be positive");
  if (signature_window_days == 0 || signature_users_per_window == 0) fail("signature history must be non-empty");
  if (!(level_thresholds.low_upper > 0.0 && level_thresholds.low_upper < level_thresholds.medium_upper)) {
    fail("level thresholds must satisfy 0 < low_upper < medium_upper");
  }
}

const CellResult* ExperimentReport::cell(const std::string& provider_id, Scheme scheme) const {
  for (const auto& c : cells) {
    if (c.provider_id == provider_id && c.scheme == scheme) return &c;
  }
  return nullptr;
}

namespace {

enum Purpose : std::uint64_t { kTruth = 1, kSignature = 2, kTrial = 3 };

void parallel_for(std::size_t count, std::size_t threads, const std::function<void(std::size_t)>& body) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, count);
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  pool.reserve(threads);
  for (std::size_t w = 0; w < threads; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) body(i);
    });
  }
}

struct ProviderWorld {
  QoSMatrix truth;
  std::optional<IaaSSignature> signature;
  std::optional<std::string> error;
};

struct CellArtifacts {
  std::optional<TrialExperience> experience;
  std::optional<PerformancePrediction> spd;
  std::optional<PerformancePrediction> lpd;
};

std::pair<double, std::map<std::string, double>> score_prediction(const QoSMatrix& truth,
                                                                  const PerformancePrediction& p) {
  std::map<std::string, double> by_attr;
  double sum = 0.0;
  for (const auto& [name, actual] : truth) {
    const double e = nrmse(actual, p.predicted.at(name));
    by_attr[name] = e;
    sum += e;
  }
  return {sum / static_cast<double>(by_attr.size()), std::move(by_attr)};
}

std::optional<double> tau_against(const RankingReport& expected, const RankingReport& other) {
  std::vector<std::string> restricted;
  for (const auto& id : expected.order) {
    if (other.scores.contains(id)) restricted.push_back(id);
  }
  if (restricted.size() < 2 || restricted.size() != other.order.size()) return std::nullopt;
  return kendall_tau(restricted, other.order);
}

}  // namespace

ExperimentReport run_experiment(const ExperimentConfig& config, const ConsumerRequest& request,
                                std::span<const ProviderProfile> profiles) {
  config.validate();
  request.validate();
  if (profiles.size() != config.provider_count) {
    std::ostringstream os;
    os << "config expects " << config.provider_count << " providers, got " << profiles.size();
    throw Error(ErrorKind::InvalidArgument, os.str());
  }
  const WorkloadSeries& workload = request.workload;
  if (workload.size() != config.horizon_days || workload.demands().start_index() != 1) {
    throw Error(ErrorKind::HorizonMismatch, "workload must span [1, horizon_days]");
  }
  for (const auto& p : profiles) {
    p.validate();
    if (p.horizon() != config.horizon_days) {
      throw Error(ErrorKind::HorizonMismatch, "profile '" + p.provider_id + "' does not span the horizon");
    }
    if (p.attributes() != request.required_qos.names()) {
      throw Error(ErrorKind::AttributeMismatch,
                  "profile '" + p.provider_id + "' and the request disagree on QoS attributes");
    }
  }

  // Plans depend only on the workload, so every provider gets the same ones.
  std::vector<TrialPlan> plans;
  for (const Scheme s : config.schemes) {
    plans.push_back(s == Scheme::EQ
                        ? select_trial_workloads_eq(workload, config.trial_length_days, config.eq_vm_count,
                                                    config.level_thresholds)
                        : select_trial_workloads(workload, config.trial_length_days, s, config.level_thresholds));
  }

  const std::size_t n_providers = profiles.size();
  std::vector<ProviderWorld> worlds(n_providers);
  HistorySpec history_template;
  history_template.windows = tile_windows(config.horizon_days, config.signature_window_days);
  history_template.user_count = history_template.windows.size() * config.signature_users_per_window;
  history_template.reference_level = config.signature_reference_level;

  parallel_for(n_providers, config.threads, [&](std::size_t p) {
    ProviderWorld& world = worlds[p];
    world.truth = ground_truth_performance(profiles[p], workload, config.level_thresholds,
                                           derive_seed(config.seed, {kTruth, p}));
    try {
      HistorySpec history = history_template;
      history.seed = derive_seed(config.seed, {kSignature, p});
      world.signature = build_signature_from_history(profiles[p], history);
    } catch (const Error& e) {
      world.error = e.what();
    }
  });

  const std::size_t n_schemes = config.schemes.size();
  ExperimentReport report;
  report.config = config;
  for (const auto& p : profiles) report.providers.push_back(p.provider_id);
  report.cells.resize(n_providers * n_schemes);
  std::vector<CellArtifacts> artifacts(report.cells.size());

  ConfidenceOptions confidence_options;
  confidence_options.threshold = config.confidence_threshold;
  confidence_options.adjust_for_levels = config.adjust_confidence_for_levels;
  SpdOptions spd_options;
  spd_options.wrap_signature = config.wrap_signature;

  parallel_for(report.cells.size(), config.threads, [&](std::size_t idx) {
    const std::size_t p = idx / n_schemes;
    const std::size_t s = idx % n_schemes;
    CellResult& cell = report.cells[idx];
    CellArtifacts& art = artifacts[idx];
    cell.provider_id = profiles[p].provider_id;
    cell.scheme = config.schemes[s];
    try {
      if (worlds[p].error) throw Error(ErrorKind::InvalidArgument, *worlds[p].error);
      art.experience = simulate_trial(profiles[p], plans[s], config.trial_start_day,
                                      derive_seed(config.seed, {kTrial, p, s}));
      cell.confidence = assess_trial(*art.experience, *worlds[p].signature, confidence_options);
      cell.discarded = !cell.confidence->passed;
      if (cell.discarded) return;
      art.spd = spd_discover(workload, *art.experience, *worlds[p].signature, spd_options);
      art.lpd = lpd_discover(workload, *art.experience);
      auto [spd_mean, spd_by] = score_prediction(worlds[p].truth, *art.spd);
      auto [lpd_mean, lpd_by] = score_prediction(worlds[p].truth, *art.lpd);
      cell.spd_nrmse = spd_mean;
      cell.lpd_nrmse = lpd_mean;
      cell.spd_nrmse_by_attribute = std::move(spd_by);
      cell.lpd_nrmse_by_attribute = std::move(lpd_by);
    } catch (const Error& e) {
      cell.error = e.what();
    }
  });

  std::vector<std::pair<std::string, QoSMatrix>> actual;
  for (std::size_t p = 0; p < n_providers; ++p) actual.emplace_back(profiles[p].provider_id, worlds[p].truth);
  report.rankings[RankMethod::EXPECTED] = expected_ranking(request, actual);

  const auto rank_idx = static_cast<std::size_t>(
      std::find(config.schemes.begin(), config.schemes.end(), config.ranking_scheme) - config.schemes.begin());
  std::vector<TrialExperience> experiences;
  std::vector<PerformancePrediction> spd, lpd;
  for (std::size_t p = 0; p < n_providers; ++p) {
    const CellArtifacts& art = artifacts[p * n_schemes + rank_idx];
    if (art.experience) experiences.push_back(*art.experience);
    if (art.spd) spd.push_back(*art.spd);
    if (art.lpd) lpd.push_back(*art.lpd);
  }
  if (!experiences.empty()) report.rankings[RankMethod::SHORT_TERM] = short_term_ranking(request, experiences);
  if (!spd.empty()) report.rankings[RankMethod::SPD] = rank_providers(request, spd);
  if (!lpd.empty()) report.rankings[RankMethod::LPD] = rank_providers(request, lpd);

  const RankingReport& expected = report.rankings.at(RankMethod::EXPECTED);
  for (const RankMethod m : {RankMethod::SHORT_TERM, RankMethod::LPD, RankMethod::SPD}) {
    const auto it = report.rankings.find(m);
    report.kendall_vs_expected[m] = it == report.rankings.end() ? std::nullopt : tau_against(expected, it->second);
  }
  return report;
}

}  // namespace sigsel::sim
