#include "sigsel/ranking.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "sigsel/error.hpp"
#include "sigsel/numeric.hpp"

namespace sigsel {

std::string_view to_string(RankMethod method) {
  switch (method) {
    case RankMethod::SPD: return "SPD";
    case RankMethod::LPD: return "LPD";
    case RankMethod::SHORT_TERM: return "SHORT_TERM";
    case RankMethod::EXPECTED: return "EXPECTED";
  }
  return "SPD";
}

std::optional<RankMethod> parse_rank_method(std::string_view text) {
  for (const RankMethod m : {RankMethod::SPD, RankMethod::LPD, RankMethod::SHORT_TERM,
                             RankMethod::EXPECTED}) {
    if (to_string(m) == text) return m;
  }
  return std::nullopt;
}

void ConsumerRequest::validate() const {
  if (required_qos.empty()) throw Error(ErrorKind::NoAttributes, "request has no QoS attributes");
  if (required_qos.length() != workload.size() ||
      required_qos.start_index() != workload.demands().start_index()) {
    std::ostringstream os;
    os << "requested QoS spans " << required_qos.length() << " timestamps but the workload spans "
       << workload.size();
    throw Error(ErrorKind::LengthMismatch, os.str());
  }
}

namespace {

void require_same_attributes(const QoSMatrix& a, const QoSMatrix& b) {
  if (a.names() != b.names()) {
    throw Error(ErrorKind::AttributeMismatch, "requested and predicted QoS attribute sets differ");
  }
  if (a.length() != b.length()) {
    std::ostringstream os;
    os << "requested QoS has " << a.length() << " timestamps, predicted has " << b.length();
    throw Error(ErrorKind::LengthMismatch, os.str());
  }
}

double weight_of(const AttributeWeights& weights, const std::string& name) {
  const auto it = weights.find(name);
  return it == weights.end() ? 1.0 : it->second;
}

}  // namespace

ProviderScore provider_score(const QoSMatrix& requested, const QoSMatrix& predicted,
                             const AttributeWeights& weights) {
  require_same_attributes(requested, predicted);
  ProviderScore score;
  for (const auto& [name, req] : requested) {
    const MinMaxResult r = min_max_normalize(req);
    const MinMaxResult p = min_max_normalize(predicted.at(name));
    if (r.constant || p.constant) score.constant_attributes.push_back(name);
    score.value += weight_of(weights, name) * rmse(r.series, p.series);
  }
  return score;
}

std::vector<std::string> order_by_score(const std::map<std::string, double>& scores) {
  std::vector<std::pair<std::string, double>> items(scores.begin(), scores.end());
  std::stable_sort(items.begin(), items.end(),
                   [](const auto& a, const auto& b) { return a.second < b.second; });
  std::vector<std::string> order;
  order.reserve(items.size());
  for (auto& [id, _] : items) order.push_back(std::move(id));
  return order;
}

RankingReport rank_providers(const ConsumerRequest& request,
                             std::span<const PerformancePrediction> predictions,
                             const AttributeWeights& weights) {
  if (predictions.empty()) throw Error(ErrorKind::InvalidArgument, "no predictions to rank");
  RankingReport report;
  report.method = predictions.front().method == DiscoveryMethod::SPD ? RankMethod::SPD
                                                                     : RankMethod::LPD;
  for (const auto& prediction : predictions) {
    if (report.scores.contains(prediction.provider_id)) {
      throw Error(ErrorKind::InvalidArgument,
                  "provider '" + prediction.provider_id + "' appears twice");
    }
    ProviderScore s = provider_score(request.required_qos, prediction.predicted, weights);
    report.scores[prediction.provider_id] = s.value;
    if (!s.constant_attributes.empty()) {
      report.flags[prediction.provider_id] = std::move(s.constant_attributes);
    }
  }
  report.order = order_by_score(report.scores);
  return report;
}

RankingReport expected_ranking(const ConsumerRequest& request,
                               std::span<const std::pair<std::string, QoSMatrix>> actual) {
  if (actual.empty()) throw Error(ErrorKind::InvalidArgument, "no providers to rank");
  RankingReport report;
  report.method = RankMethod::EXPECTED;
  for (const auto& [id, performance] : actual) {
    require_same_attributes(request.required_qos, performance);
    double score = 0.0;
    for (const auto& [name, req] : request.required_qos) score += nrmse(req, performance.at(name));
    report.scores[id] = score;
  }
  report.order = order_by_score(report.scores);
  return report;
}

RankingReport short_term_ranking(const ConsumerRequest& request,
                                 std::span<const TrialExperience> experiences,
                                 const AttributeWeights& weights) {
  if (experiences.empty()) throw Error(ErrorKind::InvalidArgument, "no trial experiences to rank");
  RankingReport report;
  report.method = RankMethod::SHORT_TERM;
  for (const auto& exp : experiences) {
    exp.validate();
    const Window window = exp.trial_window();
    QoSMatrix observed;
    for (const auto& name : exp.attributes()) {
      std::vector<double> mean(window.length(), 0.0);
      for (const QoSMatrix& stream : exp.observed) {
        const auto values = stream.at(name).values();
        for (std::size_t i = 0; i < mean.size(); ++i) mean[i] += values[i];
      }
      for (double& v : mean) v /= static_cast<double>(exp.observed.size());
      observed.insert(name, TimeSeries(std::move(mean), window.start));
    }
    const QoSMatrix requested = request.required_qos.slice(window.start, window.length());
    ProviderScore s = provider_score(requested, observed, weights);
    report.scores[exp.provider_id] = s.value;
    if (!s.constant_attributes.empty()) report.flags[exp.provider_id] = std::move(s.constant_attributes);
  }
  report.order = order_by_score(report.scores);
  return report;
}

double kendall_tau(std::span<const std::string> order_a, std::span<const std::string> order_b) {
  if (order_a.size() != order_b.size()) {
    throw Error(ErrorKind::NotPermutation, "orders have different lengths");
  }
  const std::size_t n = order_a.size();
  if (n < 2) throw Error(ErrorKind::TooShort, "Kendall tau needs at least 2 items");
  std::unordered_map<std::string, std::size_t> rank_b;
  for (std::size_t i = 0; i < n; ++i) {
    if (!rank_b.emplace(order_b[i], i).second) {
      throw Error(ErrorKind::NotPermutation, "duplicate id '" + order_b[i] + "'");
    }
  }
  std::vector<std::size_t> positions;
  positions.reserve(n);
  for (const auto& id : order_a) {
    const auto it = rank_b.find(id);
    if (it == rank_b.end()) throw Error(ErrorKind::NotPermutation, "id '" + id + "' missing from one order");
    positions.push_back(it->second);
  }
  // A duplicate in order_a would leave some id of order_b unmatched.
  std::vector<std::size_t> sorted = positions;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorKind::NotPermutation, "duplicate id in first order");
  }
  long long concordant = 0, discordant = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      (positions[i] < positions[j] ? concordant : discordant) += 1;
    }
  }
  return static_cast<double>(concordant - discordant) / (static_cast<double>(n * (n - 1)) / 2.0);
}

}  // namespace sigsel
