#include <gtest/gtest.h>

#include <set>

#include "gen.hpp"
#include "sigsel/ranking.hpp"

using namespace sigsel;
using namespace sigsel::testgen;

namespace {

const std::vector<std::string> kAttrs{"cpu", "disk", "net"};

QoSMatrix random_qos(Rng& rng, std::size_t n, std::size_t n_attrs) {
  QoSMatrix m;
  for (std::size_t a = 0; a < n_attrs; ++a) m.insert(kAttrs[a], varied(rng, n, 1, 100));
  return m;
}

QoSMatrix affine(Rng& rng, const QoSMatrix& m) {
  QoSMatrix out;
  for (const auto& [name, series] : m) {
    const double scale = real_in(rng, 1e-2, 1e2);
    const double shift = real_in(rng, -50, 50);
    std::vector<double> v(series.values().begin(), series.values().end());
    for (auto& x : v) x = scale * x + shift;
    out.insert(name, TimeSeries(v, series.start_index()));
  }
  return out;
}

struct Market {
  ConsumerRequest request;
  std::vector<PerformancePrediction> predictions;
};

Market random_market(Rng& rng) {
  const std::size_t n = size_in(rng, 2, 80);
  const std::size_t n_attrs = size_in(rng, 1, 2);
  Market m;
  m.request.workload = WorkloadSeries(TimeSeries(reals(rng, n, 0, 10)), 10);
  m.request.required_qos = random_qos(rng, n, n_attrs);
  const std::size_t providers = size_in(rng, 2, 12);
  for (std::size_t i = 0; i < providers; ++i) {
    PerformancePrediction p;
    p.provider_id = "p" + std::to_string(i);
    p.predicted = random_qos(rng, n, n_attrs);
    m.predictions.push_back(std::move(p));
  }
  std::shuffle(m.predictions.begin(), m.predictions.end(), rng);
  return m;
}

// Smallest gap between distinct sorted scores; orders are only comparable
// when it exceeds floating-point noise.
double min_gap(const std::map<std::string, double>& scores) {
  std::vector<double> v;
  for (const auto& [_, s] : scores) v.push_back(s);
  std::sort(v.begin(), v.end());
  double gap = 1e300;
  for (std::size_t i = 1; i < v.size(); ++i) gap = std::min(gap, v[i] - v[i - 1]);
  return gap;
}

}  // namespace

TEST(RankingProperty, ScoreIsNonNegativeAndZeroForAffineCopies) {
  for_cases(61, [](Rng& rng) {
    const std::size_t n = size_in(rng, 2, 100);
    const auto req = random_qos(rng, n, size_in(rng, 1, 3));
    EXPECT_GE(provider_score(req, random_qos(rng, n, req.attribute_count())).value, 0.0);
    EXPECT_NEAR(provider_score(req, affine(rng, req)).value, 0.0, 1e-9);
  });
}

TEST(RankingProperty, OrderSurvivesAffineRescalingOfPredictions) {
  for_cases(62, [](Rng& rng) {
    Market m = random_market(rng);
    const auto before = rank_providers(m.request, m.predictions);
    for (auto& p : m.predictions) p.predicted = affine(rng, p.predicted);
    const auto after = rank_providers(m.request, m.predictions);
    for (const auto& [id, s] : before.scores) EXPECT_NEAR(after.scores.at(id), s, 1e-9);
    if (min_gap(before.scores) > 1e-6) EXPECT_EQ(before.order, after.order);
  });
}

TEST(RankingProperty, SharedExtraAttributeKeepsOrder) {
  for_cases(63, [](Rng& rng) {
    Market m = random_market(rng);
    const auto before = rank_providers(m.request, m.predictions);
    const std::size_t n = m.request.workload.size();
    m.request.required_qos.insert("zz_extra", varied(rng, n, 0, 1));
    const TimeSeries shared = varied(rng, n, 0, 1);
    for (auto& p : m.predictions) p.predicted.insert("zz_extra", shared);
    const auto after = rank_providers(m.request, m.predictions);
    if (min_gap(before.scores) > 1e-6) EXPECT_EQ(before.order, after.order);
    // Every score moved by the same amount.
    const double delta = after.scores.begin()->second - before.scores.begin()->second;
    for (const auto& [id, s] : before.scores) EXPECT_NEAR(after.scores.at(id) - s, delta, 1e-9);
  });
}

TEST(RankingProperty, AttributeMatchedByEveryProviderChangesNothing) {
  for_cases(67, [](Rng& rng) {
    Market m = random_market(rng);
    const auto before = rank_providers(m.request, m.predictions);
    const TimeSeries extra = varied(rng, m.request.workload.size(), 0, 1);
    m.request.required_qos.insert("zz_extra", extra);
    for (auto& p : m.predictions) p.predicted.insert("zz_extra", extra);
    const auto after = rank_providers(m.request, m.predictions);
    EXPECT_EQ(before.order, after.order);
    EXPECT_EQ(before.scores, after.scores);
  });
}

TEST(RankingProperty, OrderIsADeterministicSortedPermutation) {
  for_cases(64, [](Rng& rng) {
    Market m = random_market(rng);
    const auto r = rank_providers(m.request, m.predictions);
    EXPECT_EQ(r, rank_providers(m.request, m.predictions));
    std::set<std::string> ids;
    for (const auto& p : m.predictions) ids.insert(p.provider_id);
    EXPECT_EQ(std::set<std::string>(r.order.begin(), r.order.end()), ids);
    EXPECT_EQ(r.order.size(), ids.size());
    for (std::size_t i = 1; i < r.order.size(); ++i) {
      const double a = r.scores.at(r.order[i - 1]), b = r.scores.at(r.order[i]);
      EXPECT_TRUE(a < b || (a == b && r.order[i - 1] < r.order[i]));
    }
    // Input order does not matter.
    std::shuffle(m.predictions.begin(), m.predictions.end(), rng);
    EXPECT_EQ(rank_providers(m.request, m.predictions).order, r.order);
  });
}

TEST(RankingProperty, KendallTauAgainstPairCountingOracle) {
  for_cases(65, [](Rng& rng) {
    const std::size_t n = size_in(rng, 2, 40);
    std::vector<std::string> a(n);
    for (std::size_t i = 0; i < n; ++i) a[i] = "id" + std::to_string(i);
    std::vector<std::string> b = a;
    std::shuffle(a.begin(), a.end(), rng);
    std::shuffle(b.begin(), b.end(), rng);
    std::map<std::string, std::size_t> pa, pb;
    for (std::size_t i = 0; i < n; ++i) {
      pa[a[i]] = i;
      pb[b[i]] = i;
    }
    long long net = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const auto& x = a[i];
        const auto& y = a[j];
        net += (pa[x] < pa[y]) == (pb[x] < pb[y]) ? 1 : -1;
      }
    }
    const double tau = kendall_tau(a, b);
    EXPECT_GE(tau, -1.0);
    EXPECT_LE(tau, 1.0);
    EXPECT_NEAR(tau, static_cast<double>(net) / (static_cast<double>(n * (n - 1)) / 2.0), 1e-12);
    EXPECT_DOUBLE_EQ(kendall_tau(a, a), 1.0);
    EXPECT_DOUBLE_EQ(kendall_tau(b, a), tau);
    std::vector<std::string> reversed(a.rbegin(), a.rend());
    EXPECT_DOUBLE_EQ(kendall_tau(a, reversed), -1.0);
  });
}

TEST(RankingProperty, ExpectedRankingPutsTheRequestFirst) {
  for_cases(66, [](Rng& rng) {
    Market m = random_market(rng);
    std::vector<std::pair<std::string, QoSMatrix>> actual;
    for (const auto& p : m.predictions) actual.emplace_back(p.provider_id, p.predicted);
    actual.emplace_back("exact", m.request.required_qos);
    const auto r = expected_ranking(m.request, actual);
    EXPECT_EQ(r.order.front(), "exact");
    EXPECT_EQ(r.scores.at("exact"), 0.0);
    for (const auto& [_, s] : r.scores) EXPECT_GE(s, 0.0);
  });
}
