#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sigsel/confidence.hpp"
#include "sigsel/ranking.hpp"
#include "sigsel/sim/profile.hpp"
#include "sigsel/trial.hpp"

namespace sigsel::sim {

struct ExperimentConfig {
  std::size_t horizon_days = 360;
  std::size_t provider_count = 7;
  std::size_t trial_length_days = 30;
  Timestamp trial_start_day = 151;  // June on a 360-day year
  std::vector<Scheme> schemes{Scheme::FG, Scheme::RG, Scheme::MG, Scheme::EQ};
  double confidence_threshold = kDefaultConfidenceThreshold;
  std::uint64_t seed = 1;

  std::size_t eq_vm_count = 3;
  // Past-user history feeding each signature: windows tiling the horizon,
  // users_per_window users on each.
  std::size_t signature_window_days = 30;
  std::size_t signature_users_per_window = 3;
  Level signature_reference_level = Level::Medium;
  LevelThresholds level_thresholds;
  Scheme ranking_scheme = Scheme::FG;
  bool adjust_confidence_for_levels = true;
  bool wrap_signature = false;
  std::string time_unit = "day";
  // 0 = hardware concurrency. Results do not depend on it.
  std::size_t threads = 0;

  // Throws InvalidArgument.
  void validate() const;
};

struct CellResult {
  std::string provider_id;
  Scheme scheme = Scheme::FG;
  std::optional<ConfidenceReport> confidence;
  bool discarded = false;
  // Mean over attributes of per-attribute NRMSE against ground truth.
  std::optional<double> spd_nrmse;
  std::optional<double> lpd_nrmse;
  std::map<std::string, double> spd_nrmse_by_attribute;
  std::map<std::string, double> lpd_nrmse_by_attribute;
  std::optional<std::string> error;
};

struct ExperimentReport {
  ExperimentConfig config;
  std::vector<std::string> providers;
  std::vector<CellResult> cells;  // provider-major, schemes in config order
  std::map<RankMethod, RankingReport> rankings;
  std::map<RankMethod, std::optional<double>> kendall_vs_expected;

  const CellResult* cell(const std::string& provider_id, Scheme scheme) const;
};

// Full pipeline per provider x scheme: plan, simulated trial, confidence
// against a history-built signature, then SPD/LPD discovery scored by NRMSE
// against ground truth; plus the four rankings on config.ranking_scheme.
// Cell failures are recorded in the cell and do not abort the run.
ExperimentReport run_experiment(const ExperimentConfig& config, const ConsumerRequest& request,
                                std::span<const ProviderProfile> profiles);

}  // namespace sigsel::sim
