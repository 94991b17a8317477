#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "sigsel/confidence.hpp"
#include "sigsel/discovery.hpp"
#include "sigsel/ranking.hpp"
#include "sigsel/signature.hpp"
#include "sigsel/sim/experiment.hpp"
#include "sigsel/sim/profile.hpp"
#include "sigsel/trial.hpp"

// JSON documents exchanged by the CLI. Every top-level document carries
// "schema": 1. Readers throw Error(ParseError) on malformed or mistyped input
// and Error(Io) when a file cannot be read or written.
namespace sigsel::io {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

// {"<attr>": [values...], ...}
json to_json(const QoSMatrix& matrix);
QoSMatrix qos_from_json(const json& j, Timestamp start_index);

// {"schema", "provider_id", "period", "attributes": {...}, "coverage": [...],
//  "flags": {"flat_attributes": [...]}}
json to_json(const IaaSSignature& signature);
IaaSSignature signature_from_json(const json& j);

// {"schema", "user_id", "window": [start, end], "observed": {...}}
json to_json(const TrialObservation& observation);
TrialObservation observation_from_json(const json& j);

// {"schema", "scheme", "trial_length", "vm_count",
//  "entries": [{"vm", "slot", "demand", "source_timestamp", "level"}]}
json to_json(const TrialPlan& plan);
TrialPlan plan_from_json(const json& j);

// {"schema", "provider_id", "trial_start", "observed": [{...} per VM]}.
// The plan travels in its own document.
json to_json(const TrialExperience& experience);
TrialExperience experience_from_json(const json& j, TrialPlan plan);

// {"schema", "provider_id", "method", "start_index", "predicted": {...}, "matched_entry": [...]}
json to_json(const PerformancePrediction& prediction);
PerformancePrediction prediction_from_json(const json& j);

// {"schema", "workload": {"capacity", "start_index", "demands": [...]}, "required_qos": {...}}
json to_json(const WorkloadSeries& workload);
WorkloadSeries workload_from_json(const json& j);
json to_json(const ConsumerRequest& request);
ConsumerRequest request_from_json(const json& j);

// {"schema", "provider_id", "base_perf": {"LOW": {...}, "MEDIUM": {...}, "HIGH": {...}},
//  "seasonal": {...}, "noise_std", "rng_seed"}
json to_json(const sim::ProviderProfile& profile);
sim::ProviderProfile profile_from_json(const json& j);

json to_json(const ConfidenceReport& report);
json to_json(const RankingReport& report);

json to_json(const sim::ExperimentConfig& config);
// Keys absent from `j` keep the values already in `base`; unknown keys are errors.
sim::ExperimentConfig config_from_json(const json& j, sim::ExperimentConfig base = {});

json to_json(const sim::ExperimentReport& report);

json read_json_file(const std::filesystem::path& path);
// Two-space indented dump followed by a newline.
void write_json_file(const std::filesystem::path& path, const json& j);

}  // namespace sigsel::io
