#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "sigsel/signature.hpp"
#include "sigsel/timeseries.hpp"
#include "sigsel/trial.hpp"

namespace sigsel {

// What a consumer observed while running a trial plan on one provider.
// observed[vm] holds that VM's QoS per trial day, spanning
// [trial_start, trial_start + trial_length - 1].
struct TrialExperience {
  std::string provider_id;
  TrialPlan plan;
  Timestamp trial_start = 1;
  std::vector<QoSMatrix> observed;

  Window trial_window() const noexcept {
    return {trial_start, trial_start + static_cast<Timestamp>(plan.trial_length) - 1};
  }
  // Long-term timestamp at which the entry was executed.
  Timestamp executed_at(const TrialEntry& entry) const noexcept {
    return trial_start + static_cast<Timestamp>(entry.slot) - 1;
  }
  double observed_value(const TrialEntry& entry, const std::string& attribute) const;
  std::vector<std::string> attributes() const;

  // Throws EmptyPlan, WindowMismatch or LengthMismatch.
  void validate() const;
};

inline constexpr double kDefaultConfidenceThreshold = 0.7;

struct AttributeConfidence {
  double value = 0.0;
  bool degenerate = false;  // flat observation or slice; value forced to 0
};

// Pearson correlation of the std-normalized observation with the signature
// slice. Throws LengthMismatch or TooShort.
AttributeConfidence attribute_confidence(const TimeSeries& observed, const TimeSeries& signature_slice);

// Mean of the per-attribute values; throws NoAttributes on an empty map.
double total_confidence(const std::map<std::string, double>& per_attribute);

struct ConfidenceReport {
  std::string provider_id;
  std::map<std::string, double> per_attribute;
  double total = 0.0;
  bool passed = false;
  std::vector<std::string> skipped_attributes;     // not present on both sides
  std::vector<std::string> degenerate_attributes;  // zero-variance inputs

  friend bool operator==(const ConfidenceReport&, const ConfidenceReport&) = default;
};

struct ConfidenceOptions {
  double threshold = kDefaultConfidenceThreshold;
  // Divide observation and slice by their per-workload-level means before
  // correlating, so step changes between demand levels in the trial do not
  // mask the temporal shape. A no-op when every slot shares one level.
  bool adjust_for_levels = true;
};

// Scores every attribute present in both the experience and the signature.
// EQ experiences are scored per VM stream and averaged.
ConfidenceReport assess_trial(const TrialExperience& experience, const IaaSSignature& signature,
                              const ConfidenceOptions& options = {});

struct ProviderFilter {
  std::vector<ConfidenceReport> kept;
  std::vector<ConfidenceReport> discarded;
};

// Partitions reports on total >= threshold, preserving input order.
ProviderFilter filter_providers(std::vector<ConfidenceReport> reports, double threshold);

}  // namespace sigsel
