#include <gtest/gtest.h>

#include <cmath>

#include "sigsel/error.hpp"
#include "sigsel/numeric.hpp"
#include "sigsel/ranking.hpp"

using namespace sigsel;

namespace {

QoSMatrix qos(std::map<std::string, std::vector<double>> rows) {
  QoSMatrix m;
  for (auto& [k, v] : rows) m.insert(k, TimeSeries(v));
  return m;
}

PerformancePrediction prediction(std::string id, QoSMatrix m) {
  PerformancePrediction p;
  p.provider_id = std::move(id);
  p.predicted = std::move(m);
  return p;
}

ConsumerRequest request(QoSMatrix m) {
  return {WorkloadSeries(TimeSeries(std::vector<double>(m.length(), 1.0)), 10.0), std::move(m)};
}

}  // namespace

TEST(ProviderScore, Examples) {
  const auto req = qos({{"cpu", {1, 5, 3}}});
  EXPECT_DOUBLE_EQ(provider_score(req, req).value, 0.0);
  EXPECT_NEAR(provider_score(qos({{"cpu", {0, 1}}}), qos({{"cpu", {1, 0}}})).value, 1.0, 1e-12);
  // Each attribute contributes rmse([0,1],[0.5,0.5]) = 0.5.
  EXPECT_NEAR(provider_score(qos({{"a", {0, 1}}, {"b", {2, 4}}}), qos({{"a", {3, 3}}, {"b", {7, 7}}})).value, 1.0,
              1e-12);
}

TEST(ProviderScore, FlagsConstantSeries) {
  const auto s = provider_score(qos({{"a", {0, 1}}, {"b", {2, 4}}}), qos({{"a", {3, 3}}, {"b", {1, 7}}}));
  EXPECT_EQ(s.constant_attributes, (std::vector<std::string>{"a"}));
}

TEST(ProviderScore, WeightsDefaultToOne) {
  const auto req = qos({{"a", {0, 1}}, {"b", {0, 1}}});
  const auto pred = qos({{"a", {1, 0}}, {"b", {0, 1}}});
  EXPECT_NEAR(provider_score(req, pred, {{"a", 3.0}}).value, 3.0, 1e-12);
  EXPECT_NEAR(provider_score(req, pred, {{"b", 3.0}}).value, 1.0, 1e-12);
}

TEST(ProviderScore, Errors) {
  EXPECT_THROW(provider_score(qos({{"a", {0, 1}}}), qos({{"b", {0, 1}}})), Error);
  try {
    provider_score(qos({{"a", {0, 1}}}), qos({{"a", {0, 1, 2}}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::LengthMismatch);
  }
}

TEST(RankProviders, OrdersAscending) {
  const auto req = request(qos({{"cpu", {0, 1, 2, 3}}}));
  std::vector<PerformancePrediction> preds{prediction("B", qos({{"cpu", {3, 2, 1, 0}}})),
                                           prediction("A", qos({{"cpu", {0, 1, 2, 3}}})),
                                           prediction("C", qos({{"cpu", {0, 2, 1, 3}}}))};
  const auto r = rank_providers(req, preds);
  EXPECT_EQ(r.order, (std::vector<std::string>{"A", "C", "B"}));
  EXPECT_DOUBLE_EQ(r.scores.at("A"), 0.0);
  EXPECT_EQ(r.method, RankMethod::SPD);
}

TEST(RankProviders, TiesBreakById) {
  EXPECT_EQ(order_by_score({{"b", 0.2}, {"a", 0.2}, {"c", 0.1}}), (std::vector<std::string>{"c", "a", "b"}));
  EXPECT_EQ(order_by_score({{"A", 0.2}, {"B", 0.5}}), (std::vector<std::string>{"A", "B"}));
}

TEST(RankProviders, RecordsMethodOfPredictions) {
  const auto req = request(qos({{"cpu", {0, 1}}}));
  auto p = prediction("A", qos({{"cpu", {0, 1}}}));
  p.method = DiscoveryMethod::LPD;
  const std::vector<PerformancePrediction> preds{p};
  EXPECT_EQ(rank_providers(req, preds).method, RankMethod::LPD);
}

TEST(ExpectedRanking, ConstructedOffsets) {
  const std::vector<double> base{0, 10, 5, 8, 2};
  const auto req = request(qos({{"cpu", base}}));
  std::vector<std::pair<std::string, QoSMatrix>> actual;
  for (const auto& [id, off] : std::vector<std::pair<std::string, double>>{{"z", 3.0}, {"x", 1.0}, {"y", 2.0}}) {
    std::vector<double> v = base;
    for (auto& x : v) x += off;
    actual.emplace_back(id, qos({{"cpu", v}}));
  }
  const auto r = expected_ranking(req, actual);
  EXPECT_EQ(r.method, RankMethod::EXPECTED);
  EXPECT_EQ(r.order, (std::vector<std::string>{"x", "y", "z"}));
  // Independent oracle: offset / range.
  EXPECT_NEAR(r.scores.at("x"), 0.1, 1e-12);
  EXPECT_NEAR(r.scores.at("y"), 0.2, 1e-12);
  EXPECT_NEAR(r.scores.at("z"), 0.3, 1e-12);
}

TEST(ExpectedRanking, ExactMatchFirst) {
  const auto req = request(qos({{"cpu", {1, 2, 3}}}));
  const std::vector<std::pair<std::string, QoSMatrix>> actual{{"a", qos({{"cpu", {2, 2, 2}}})},
                                                              {"b", qos({{"cpu", {1, 2, 3}}})}};
  EXPECT_EQ(expected_ranking(req, actual).order.front(), "b");
  const std::vector<std::pair<std::string, QoSMatrix>> single{{"a", qos({{"cpu", {2, 2, 2}}})}};
  EXPECT_EQ(expected_ranking(req, single).order, (std::vector<std::string>{"a"}));
}

TEST(ShortTermRanking, UsesOnlyTheTrialWindow) {
  // Request rises everywhere; A tracks it during the trial, B does not.
  const auto req = request(qos({{"cpu", {1, 2, 3, 4, 5, 6}}}));
  auto make = [](std::string id, std::vector<double> obs) {
    TrialExperience e;
    e.provider_id = std::move(id);
    e.plan.trial_length = 3;
    for (std::size_t i = 0; i < 3; ++i) e.plan.entries.push_back({0, i + 1, 1.0, 1, Level::Low});
    e.trial_start = 3;
    QoSMatrix m;
    m.insert("cpu", TimeSeries(std::move(obs), 3));
    e.observed.push_back(m);
    return e;
  };
  const std::vector<TrialExperience> exps{make("B", {5, 4, 3}), make("A", {30, 40, 50})};
  const auto r = short_term_ranking(req, exps);
  EXPECT_EQ(r.method, RankMethod::SHORT_TERM);
  EXPECT_EQ(r.order, (std::vector<std::string>{"A", "B"}));
  EXPECT_DOUBLE_EQ(r.scores.at("A"), 0.0);
}

TEST(KendallTau, Examples) {
  const std::vector<std::string> seven{"p1", "p2", "p3", "p4", "p5", "p6", "p7"};
  EXPECT_DOUBLE_EQ(kendall_tau(seven, seven), 1.0);
  std::vector<std::string> reversed(seven.rbegin(), seven.rend());
  EXPECT_DOUBLE_EQ(kendall_tau(seven, reversed), -1.0);
  const std::vector<std::string> a{"p1", "p2", "p3"}, b{"p1", "p3", "p2"};
  EXPECT_NEAR(kendall_tau(a, b), 1.0 / 3.0, 1e-12);
}

TEST(KendallTau, Errors) {
  const std::vector<std::string> a{"p1", "p2"}, b{"p1", "p3"}, one{"p1"}, dup{"p1", "p1"};
  try {
    kendall_tau(a, b);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotPermutation);
  }
  EXPECT_THROW(kendall_tau(dup, dup), Error);
  EXPECT_THROW(kendall_tau(one, one), Error);
}

TEST(ConsumerRequest, Validate) {
  ConsumerRequest r{WorkloadSeries(TimeSeries({1, 2, 3}), 10), qos({{"cpu", {1, 2}}})};
  EXPECT_THROW(r.validate(), Error);
}
