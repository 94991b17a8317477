#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sigsel/confidence.hpp"
#include "sigsel/signature.hpp"
#include "sigsel/timeseries.hpp"
#include "sigsel/trial.hpp"

namespace sigsel {

enum class DiscoveryMethod { SPD, LPD };

std::string_view to_string(DiscoveryMethod method);
std::optional<DiscoveryMethod> parse_discovery_method(std::string_view text);

struct PerformancePrediction {
  std::string provider_id;
  DiscoveryMethod method = DiscoveryMethod::SPD;
  QoSMatrix predicted;                     // one row per attribute over the workload horizon
  std::vector<std::size_t> matched_entry;  // plan entry used at each timestamp

  friend bool operator==(const PerformancePrediction&, const PerformancePrediction&) = default;
};

// Plan entry whose demand is closest to `demand`; ties go to the lower index.
// Throws EmptyPlan.
std::size_t nearest_neighbor(double demand, const TrialPlan& plan);

struct SpdOptions {
  // Map horizon timestamps beyond the signature period back modulo the period
  // instead of failing with SignatureTooShort.
  bool wrap_signature = false;
};

// Signature-based discovery: at every timestamp t the nearest trial entry's
// observation is rescaled by signature(t) / signature(time the entry ran).
// Throws SignatureTooShort, ZeroSignatureValue, AttributeMismatch, EmptyPlan.
PerformancePrediction spd_discover(const WorkloadSeries& workload, const TrialExperience& experience,
                                   const IaaSSignature& signature, const SpdOptions& options = {});

// Baseline: the nearest trial entry's observation is taken as-is.
PerformancePrediction lpd_discover(const WorkloadSeries& workload, const TrialExperience& experience);

}  // namespace sigsel
