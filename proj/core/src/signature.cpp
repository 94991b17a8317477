#include "sigsel/signature.hpp"

#include <sstream>

#include "sigsel/error.hpp"
#include "sigsel/numeric.hpp"

namespace sigsel {

namespace {

void validate_observation(const TrialObservation& obs, std::size_t period) {
  const auto T = static_cast<Timestamp>(period);
  if (!obs.window.within(1, T)) {
    std::ostringstream os;
    os << "observation '" << obs.user_id << "' window [" << obs.window.start << ", "
       << obs.window.end << "] is outside [1, " << T << "]";
    throw Error(ErrorKind::OutOfRange, os.str());
  }
  if (obs.observed.empty()) {
    throw Error(ErrorKind::NoAttributes, "observation '" + obs.user_id + "' has no attributes");
  }
  if (obs.observed.length() != obs.window.length()) {
    std::ostringstream os;
    os << "observation '" << obs.user_id << "' has " << obs.observed.length()
       << " samples for a window of " << obs.window.length();
    throw Error(ErrorKind::LengthMismatch, os.str());
  }
}

}  // namespace

AggregatedObservations aggregate_observations(std::span<const TrialObservation> observations,
                                              std::size_t period_length) {
  if (observations.empty()) throw Error(ErrorKind::InvalidArgument, "no observations to aggregate");
  if (period_length == 0) throw Error(ErrorKind::InvalidArgument, "period length must be positive");

  const std::vector<std::string> attributes = observations.front().observed.names();
  for (const auto& obs : observations) {
    validate_observation(obs, period_length);
    if (obs.observed.names() != attributes) {
      throw Error(ErrorKind::AttributeMismatch,
                  "observation '" + obs.user_id + "' disagrees on the QoS attribute set");
    }
  }

  std::vector<std::size_t> coverage(period_length, 0);
  for (const auto& obs : observations) {
    for (Timestamp t = obs.window.start; t <= obs.window.end; ++t) {
      ++coverage[static_cast<std::size_t>(t - 1)];
    }
  }
  std::vector<std::int64_t> gaps;
  for (std::size_t i = 0; i < period_length; ++i) {
    if (coverage[i] == 0) gaps.push_back(static_cast<std::int64_t>(i + 1));
  }
  if (!gaps.empty()) throw CoverageGapError(std::move(gaps));

  AggregatedObservations out;
  for (const auto& name : attributes) {
    std::vector<double> sum(period_length, 0.0);
    for (const auto& obs : observations) {
      const auto values = obs.observed.at(name).values();
      for (std::size_t i = 0; i < values.size(); ++i) {
        sum[static_cast<std::size_t>(obs.window.start - 1) + i] += values[i];
      }
    }
    for (std::size_t i = 0; i < period_length; ++i) sum[i] /= static_cast<double>(coverage[i]);
    out.mean.insert(name, TimeSeries(std::move(sum), 1));
  }
  out.coverage = std::move(coverage);
  return out;
}

IaaSSignature generate_signature(std::string provider_id,
                                 std::span<const TrialObservation> observations,
                                 std::size_t period_length) {
  AggregatedObservations agg = aggregate_observations(observations, period_length);
  IaaSSignature sig;
  sig.provider_id = std::move(provider_id);
  for (const auto& [name, series] : agg.mean) {
    if (population_stddev(series.values()) == 0.0) {
      sig.flat_attributes.insert(name);
      sig.matrix.insert(name, TimeSeries(std::vector<double>(series.size(), 1.0), 1));
    } else {
      sig.matrix.insert(name, std_normalize(series));
    }
  }
  sig.coverage = std::move(agg.coverage);
  return sig;
}

double IaaSSignature::value(const std::string& attribute, Timestamp t, bool wrap) const {
  const TimeSeries& row = matrix.at(attribute);
  const auto T = static_cast<Timestamp>(row.size());
  if (wrap && T > 0 && t >= 1) t = (t - 1) % T + 1;
  if (t < 1 || t > T) {
    std::ostringstream os;
    os << "signature of '" << provider_id << "' covers [1, " << T << "], not timestamp " << t;
    throw Error(ErrorKind::SignatureTooShort, os.str());
  }
  return row[static_cast<std::size_t>(t - 1)];
}

QoSMatrix signature_window(const IaaSSignature& signature, Timestamp start, std::size_t length) {
  return signature.matrix.slice(start, length);
}

}  // namespace sigsel
