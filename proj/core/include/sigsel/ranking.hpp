#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sigsel/confidence.hpp"
#include "sigsel/discovery.hpp"
#include "sigsel/timeseries.hpp"

namespace sigsel {

enum class RankMethod { SPD, LPD, SHORT_TERM, EXPECTED };

std::string_view to_string(RankMethod method);
std::optional<RankMethod> parse_rank_method(std::string_view text);

struct ConsumerRequest {
  WorkloadSeries workload;
  QoSMatrix required_qos;  // requested performance per attribute over the workload horizon

  // Throws LengthMismatch when the request and workload horizons differ.
  void validate() const;
};

// Missing attributes weigh 1.
using AttributeWeights = std::map<std::string, double>;

struct ProviderScore {
  double value = 0.0;
  std::vector<std::string> constant_attributes;  // hit the min-max 0.5 convention
};

// Sum over attributes of RMSE between the independently min-max normalized
// requested and predicted series. Throws AttributeMismatch, LengthMismatch.
ProviderScore provider_score(const QoSMatrix& requested, const QoSMatrix& predicted,
                             const AttributeWeights& weights = {});

struct RankingReport {
  RankMethod method = RankMethod::SPD;
  std::map<std::string, double> scores;
  std::vector<std::string> order;  // best (lowest score) first
  std::map<std::string, std::vector<std::string>> flags;

  friend bool operator==(const RankingReport&, const RankingReport&) = default;
};

// Orders ids ascending by score, ties broken by id.
std::vector<std::string> order_by_score(const std::map<std::string, double>& scores);

RankingReport rank_providers(const ConsumerRequest& request,
                             std::span<const PerformancePrediction> predictions,
                             const AttributeWeights& weights = {});

// Ground-truth ordering: per attribute NRMSE of the actual series against the
// request (normalized by the request's range), summed.
RankingReport expected_ranking(const ConsumerRequest& request,
                               std::span<const std::pair<std::string, QoSMatrix>> actual);

// Ranks on the trial window alone: the request restricted to the trial window
// against what was observed there (VM streams averaged).
RankingReport short_term_ranking(const ConsumerRequest& request,
                                 std::span<const TrialExperience> experiences,
                                 const AttributeWeights& weights = {});

// (concordant - discordant) / (n (n - 1) / 2). Throws NotPermutation, TooShort.
double kendall_tau(std::span<const std::string> order_a, std::span<const std::string> order_b);

}  // namespace sigsel
