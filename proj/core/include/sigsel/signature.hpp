#pragma once

#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "sigsel/timeseries.hpp"

namespace sigsel {

// QoS performance one past trial user saw over `window` of the reference
// period. Every observed series has window.length() samples.
struct TrialObservation {
  std::string user_id;
  QoSMatrix observed;
  Window window;
};

struct AggregatedObservations {
  QoSMatrix mean;                     // per attribute, per timestamp mean over [1, T]
  std::vector<std::size_t> coverage;  // number of observations covering each timestamp
};

// Per-timestamp mean of every observation covering it. Throws NoAttributes,
// AttributeMismatch, OutOfRange / LengthMismatch for malformed windows and
// CoverageGapError when some timestamp in [1, period] is uncovered.
AggregatedObservations aggregate_observations(std::span<const TrialObservation> observations,
                                              std::size_t period_length);

// Relative long-term performance profile of one provider over [1, T]. Raw
// observations are not kept.
struct IaaSSignature {
  std::string provider_id;
  QoSMatrix matrix;
  std::vector<std::size_t> coverage;
  // Attributes whose aggregate was flat; their rows are all ones.
  std::set<std::string> flat_attributes;

  std::size_t period() const noexcept { return matrix.length(); }
  bool has_attribute(const std::string& name) const { return matrix.contains(name); }

  // Signature value at absolute timestamp t. With wrap, timestamps past the
  // period map back modulo the period (yearly seasonality assumption).
  double value(const std::string& attribute, Timestamp t, bool wrap = false) const;
};

// Aggregates then divides each attribute by its population standard deviation.
IaaSSignature generate_signature(std::string provider_id,
                                 std::span<const TrialObservation> observations,
                                 std::size_t period_length);

// Rows of the signature over [start, start + length - 1]; throws OutOfRange.
QoSMatrix signature_window(const IaaSSignature& signature, Timestamp start, std::size_t length);

}  // namespace sigsel
