#include "sigsel/confidence.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "sigsel/error.hpp"
#include "sigsel/numeric.hpp"

namespace sigsel {

double TrialExperience::observed_value(const TrialEntry& entry, const std::string& attribute) const {
  if (entry.vm >= observed.size()) {
    throw Error(ErrorKind::OutOfRange, "trial entry refers to a VM without observations");
  }
  return observed[entry.vm].at(attribute).at_time(executed_at(entry));
}

std::vector<std::string> TrialExperience::attributes() const {
  return observed.empty() ? std::vector<std::string>{} : observed.front().names();
}

void TrialExperience::validate() const {
  if (plan.entries.empty()) throw Error(ErrorKind::EmptyPlan, "trial plan has no entries");
  if (observed.size() != plan.vm_count) {
    std::ostringstream os;
    os << "experience has " << observed.size() << " observation streams for " << plan.vm_count
       << " VMs";
    throw Error(ErrorKind::WindowMismatch, os.str());
  }
  const Window window = trial_window();
  for (const QoSMatrix& stream : observed) {
    if (stream.empty()) throw Error(ErrorKind::NoAttributes, "observation stream has no attributes");
    if (stream.length() != window.length() || stream.start_index() != window.start) {
      std::ostringstream os;
      os << "observations span " << stream.length() << " samples from " << stream.start_index()
         << ", expected the trial window [" << window.start << ", " << window.end << "]";
      throw Error(ErrorKind::WindowMismatch, os.str());
    }
    if (stream.names() != observed.front().names()) {
      throw Error(ErrorKind::AttributeMismatch, "VM observation streams disagree on attributes");
    }
  }
  for (const TrialEntry& e : plan.entries) {
    if (e.vm >= plan.vm_count || e.slot < 1 || e.slot > plan.trial_length) {
      throw Error(ErrorKind::OutOfRange, "trial entry outside the plan's VM/slot grid");
    }
  }
}

AttributeConfidence attribute_confidence(const TimeSeries& observed, const TimeSeries& signature_slice) {
  if (observed.size() != signature_slice.size()) {
    throw Error(ErrorKind::LengthMismatch, "observation and signature slice differ in length");
  }
  if (observed.size() < 2) throw Error(ErrorKind::TooShort, "confidence needs at least 2 trial samples");
  try {
    return {pearson(std_normalize(observed), signature_slice), false};
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::ZeroVariance) throw;
    return {0.0, true};
  }
}

double total_confidence(const std::map<std::string, double>& per_attribute) {
  if (per_attribute.empty()) throw Error(ErrorKind::NoAttributes, "no attribute confidences to average");
  double sum = 0.0;
  for (const auto& [_, v] : per_attribute) sum += v;
  return sum / static_cast<double>(per_attribute.size());
}

namespace {

void divide_by_level_means(std::vector<double>& values, const std::vector<Level>& levels) {
  for (const Level level : {Level::Low, Level::Medium, Level::High}) {
    double sum = 0.0;
    std::size_t n = 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (levels[i] == level) {
        sum += values[i];
        ++n;
      }
    }
    if (n == 0 || sum == 0.0) continue;
    const double mean = sum / static_cast<double>(n);
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (levels[i] == level) values[i] /= mean;
    }
  }
}

}  // namespace

ConfidenceReport assess_trial(const TrialExperience& experience, const IaaSSignature& signature,
                              const ConfidenceOptions& options) {
  experience.validate();
  ConfidenceReport report;
  report.provider_id = experience.provider_id;

  const std::vector<std::string> observed_attrs = experience.attributes();
  for (const auto& name : signature.matrix.names()) {
    if (std::find(observed_attrs.begin(), observed_attrs.end(), name) == observed_attrs.end()) {
      report.skipped_attributes.push_back(name);
    }
  }
  for (const auto& name : observed_attrs) {
    if (!signature.has_attribute(name)) report.skipped_attributes.push_back(name);
  }
  std::sort(report.skipped_attributes.begin(), report.skipped_attributes.end());

  const std::size_t k = experience.plan.trial_length;
  for (const auto& name : observed_attrs) {
    if (!signature.has_attribute(name)) continue;
    double sum = 0.0;
    bool degenerate = false;
    for (std::size_t vm = 0; vm < experience.plan.vm_count; ++vm) {
      std::vector<double> obs(k), slice(k);
      std::vector<Level> levels(k, Level::Low);
      for (const TrialEntry& e : experience.plan.entries) {
        if (e.vm != vm) continue;
        const std::size_t i = e.slot - 1;
        const Timestamp at = experience.executed_at(e);
        obs[i] = experience.observed[vm].at(name).at_time(at);
        slice[i] = signature.value(name, at);
        levels[i] = e.level;
      }
      if (options.adjust_for_levels) {
        divide_by_level_means(obs, levels);
        divide_by_level_means(slice, levels);
      }
      const AttributeConfidence c = attribute_confidence(TimeSeries(std::move(obs)),
                                                         TimeSeries(std::move(slice)));
      sum += c.value;
      degenerate = degenerate || c.degenerate;
    }
    report.per_attribute[name] = sum / static_cast<double>(experience.plan.vm_count);
    if (degenerate) report.degenerate_attributes.push_back(name);
  }

  report.total = total_confidence(report.per_attribute);
  report.passed = report.total >= options.threshold;
  return report;
}

ProviderFilter filter_providers(std::vector<ConfidenceReport> reports, double threshold) {
  if (threshold < -1.0 || threshold > 1.0) {
    throw Error(ErrorKind::InvalidArgument, "confidence threshold must lie in [-1, 1]");
  }
  ProviderFilter out;
  for (auto& r : reports) {
    r.passed = r.total >= threshold;
    (r.passed ? out.kept : out.discarded).push_back(std::move(r));
  }
  return out;
}

}  // namespace sigsel
