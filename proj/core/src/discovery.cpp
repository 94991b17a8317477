#include "sigsel/discovery.hpp"

#include <cmath>
#include <sstream>

#include "sigsel/error.hpp"

namespace sigsel {

std::string_view to_string(DiscoveryMethod method) {
  return method == DiscoveryMethod::SPD ? "SPD" : "LPD";
}

std::optional<DiscoveryMethod> parse_discovery_method(std::string_view text) {
  if (text == "SPD" || text == "spd") return DiscoveryMethod::SPD;
  if (text == "LPD" || text == "lpd") return DiscoveryMethod::LPD;
  return std::nullopt;
}

std::size_t nearest_neighbor(double demand, const TrialPlan& plan) {
  if (plan.entries.empty()) throw Error(ErrorKind::EmptyPlan, "trial plan has no entries");
  std::size_t best = 0;
  double best_distance = std::abs(demand - plan.entries.front().demand);
  for (std::size_t i = 1; i < plan.entries.size(); ++i) {
    const double d = std::abs(demand - plan.entries[i].demand);
    if (d < best_distance) {
      best = i;
      best_distance = d;
    }
  }
  return best;
}

namespace {

std::vector<std::size_t> match_all(const WorkloadSeries& workload, const TrialPlan& plan) {
  std::vector<std::size_t> matched(workload.size());
  for (std::size_t i = 0; i < workload.size(); ++i) matched[i] = nearest_neighbor(workload[i], plan);
  return matched;
}

}  // namespace

PerformancePrediction spd_discover(const WorkloadSeries& workload, const TrialExperience& experience,
                                   const IaaSSignature& signature, const SpdOptions& options) {
  experience.validate();
  if (workload.size() == 0) throw Error(ErrorKind::EmptyWorkload, "workload has no demands");
  const Timestamp origin = workload.demands().start_index();
  const Timestamp horizon_end = origin + static_cast<Timestamp>(workload.size()) - 1;
  if (!options.wrap_signature &&
      (origin < 1 || horizon_end > static_cast<Timestamp>(signature.period()))) {
    std::ostringstream os;
    os << "signature covers [1, " << signature.period() << "] but the workload spans [" << origin
       << ", " << horizon_end << "]";
    throw Error(ErrorKind::SignatureTooShort, os.str());
  }
  const Window trial = experience.trial_window();
  if (trial.start < origin || trial.end > horizon_end) {
    throw Error(ErrorKind::WindowMismatch, "trial window lies outside the workload horizon");
  }

  PerformancePrediction out;
  out.provider_id = experience.provider_id;
  out.method = DiscoveryMethod::SPD;
  out.matched_entry = match_all(workload, experience.plan);

  for (const auto& name : experience.attributes()) {
    if (!signature.has_attribute(name)) {
      throw Error(ErrorKind::AttributeMismatch,
                  "signature of '" + signature.provider_id + "' has no attribute '" + name + "'");
    }
    std::vector<double> values(workload.size());
    for (std::size_t i = 0; i < workload.size(); ++i) {
      const TrialEntry& entry = experience.plan.entries[out.matched_entry[i]];
      const Timestamp ran_at = experience.executed_at(entry);
      const double at_trial = signature.value(name, ran_at, options.wrap_signature);
      if (at_trial == 0.0) {
        std::ostringstream os;
        os << "signature '" << name << "' is zero at trial timestamp " << ran_at;
        throw Error(ErrorKind::ZeroSignatureValue, os.str());
      }
      const Timestamp t = origin + static_cast<Timestamp>(i);
      const double transform = signature.value(name, t, options.wrap_signature) / at_trial;
      values[i] = transform * experience.observed_value(entry, name);
    }
    out.predicted.insert(name, TimeSeries(std::move(values), origin));
  }
  return out;
}

PerformancePrediction lpd_discover(const WorkloadSeries& workload, const TrialExperience& experience) {
  experience.validate();
  if (workload.size() == 0) throw Error(ErrorKind::EmptyWorkload, "workload has no demands");
  PerformancePrediction out;
  out.provider_id = experience.provider_id;
  out.method = DiscoveryMethod::LPD;
  out.matched_entry = match_all(workload, experience.plan);
  for (const auto& name : experience.attributes()) {
    std::vector<double> values(workload.size());
    for (std::size_t i = 0; i < workload.size(); ++i) {
      values[i] = experience.observed_value(experience.plan.entries[out.matched_entry[i]], name);
    }
    out.predicted.insert(name, TimeSeries(std::move(values), workload.demands().start_index()));
  }
  return out;
}

}  // namespace sigsel
