#include <gtest/gtest.h>

#include "gen.hpp"
#include "sigsel/discovery.hpp"
#include "sigsel/numeric.hpp"

using namespace sigsel;
using namespace sigsel::testgen;

namespace {

const std::vector<std::string> kAttrs{"cpu", "net"};

struct World {
  WorkloadSeries workload;
  IaaSSignature signature;
  TrialExperience experience;
};

World random_world(Rng& rng, bool constant_workload = false) {
  World w;
  const std::size_t horizon = size_in(rng, 10, 200);
  const double capacity = 100;
  auto demands = pooled_demands(rng, horizon, size_in(rng, 1, 30), capacity);
  if (constant_workload) std::fill(demands.begin(), demands.end(), demands.front());
  w.workload = WorkloadSeries(TimeSeries(demands), capacity);

  w.signature.provider_id = "p";
  for (const auto& a : kAttrs) w.signature.matrix.insert(a, varied(rng, horizon, 0.5, 2.0));
  w.signature.coverage.assign(horizon, 1);

  const std::size_t k = size_in(rng, 2, std::min<std::size_t>(horizon, 30));
  w.experience.provider_id = "p";
  w.experience.plan = select_trial_workloads(w.workload, k, rng() % 2 ? Scheme::FG : Scheme::RG);
  w.experience.trial_start = static_cast<Timestamp>(size_in(rng, 1, horizon - k + 1));
  QoSMatrix obs;
  for (const auto& a : kAttrs) obs.insert(a, TimeSeries(reals(rng, k, 1, 100), w.experience.trial_start));
  w.experience.observed = {obs};
  return w;
}

}  // namespace

TEST(DiscoveryProperty, FlatSignatureReducesToLpd) {
  for_cases(51, [](Rng& rng) {
    World w = random_world(rng);
    IaaSSignature flat = w.signature;
    flat.matrix = QoSMatrix();
    for (const auto& a : kAttrs) flat.matrix.insert(a, TimeSeries(std::vector<double>(w.workload.size(), 1.0)));
    const auto spd = spd_discover(w.workload, w.experience, flat);
    const auto lpd = lpd_discover(w.workload, w.experience);
    EXPECT_EQ(spd.predicted, lpd.predicted);
    EXPECT_EQ(spd.matched_entry, lpd.matched_entry);
  });
}

TEST(DiscoveryProperty, ReproducesObservationWhereTheTrialRan) {
  for_cases(52, [](Rng& rng) {
    World w = random_world(rng);
    const auto spd = spd_discover(w.workload, w.experience, w.signature);
    for (std::size_t i = 0; i < w.workload.size(); ++i) {
      const auto& entry = w.experience.plan.entries[spd.matched_entry[i]];
      const Timestamp t = static_cast<Timestamp>(i) + 1;
      if (w.experience.executed_at(entry) != t) continue;
      for (const auto& a : kAttrs) {
        EXPECT_DOUBLE_EQ(spd.predicted.at(a).at_time(t), w.experience.observed_value(entry, a));
      }
    }
  });
}

TEST(DiscoveryProperty, TrialDayRunningItsOwnDemandIsAFixpoint) {
  for_cases(57, [](Rng& rng) {
    World w = random_world(rng);
    const auto spd = spd_discover(w.workload, w.experience, w.signature);
    const auto& entries = w.experience.plan.entries;
    for (const auto& e : entries) {
      const Timestamp t = w.experience.executed_at(e);
      if (w.workload[static_cast<std::size_t>(t - 1)] != e.demand) continue;
      // A repeated (padded) demand resolves to its first entry, which ran elsewhere.
      const auto same = std::count_if(entries.begin(), entries.end(),
                                      [&](const TrialEntry& o) { return o.demand == e.demand; });
      if (same != 1) continue;
      for (const auto& a : kAttrs) {
        EXPECT_EQ(spd.predicted.at(a).at_time(t), w.experience.observed_value(e, a));
      }
    }
  });
}

TEST(DiscoveryProperty, InvariantToSignatureScale) {
  for_cases(53, [](Rng& rng) {
    World w = random_world(rng);
    IaaSSignature scaled = w.signature;
    scaled.matrix = QoSMatrix();
    for (const auto& [name, series] : w.signature.matrix) {
      const double c = real_in(rng, 1e-3, 1e3);
      std::vector<double> v(series.values().begin(), series.values().end());
      for (auto& x : v) x *= c;
      scaled.matrix.insert(name, TimeSeries(v));
    }
    const auto a = spd_discover(w.workload, w.experience, w.signature);
    const auto b = spd_discover(w.workload, w.experience, scaled);
    for (const auto& attr : kAttrs) {
      EXPECT_LE(max_rel_diff(a.predicted.at(attr).values(), b.predicted.at(attr).values()), 1e-12);
    }
  });
}

TEST(DiscoveryProperty, ConstantWorkloadInheritsSignatureShape) {
  for_cases(54, [](Rng& rng) {
    World w = random_world(rng, true);
    const auto spd = spd_discover(w.workload, w.experience, w.signature);
    for (const auto& a : kAttrs) {
      EXPECT_NEAR(pearson(spd.predicted.at(a), w.signature.matrix.at(a)), 1.0, 1e-9);
      EXPECT_LE(max_rel_diff(std_normalize(spd.predicted.at(a)).values(),
                             std_normalize(w.signature.matrix.at(a)).values()),
                1e-9);
    }
  });
}

TEST(DiscoveryProperty, PredictionsSpanTheHorizonWithNearestMatches) {
  for_cases(55, [](Rng& rng) {
    World w = random_world(rng);
    const auto spd = spd_discover(w.workload, w.experience, w.signature);
    const auto lpd = lpd_discover(w.workload, w.experience);
    for (const auto* p : {&spd, &lpd}) {
      ASSERT_EQ(p->matched_entry.size(), w.workload.size());
      EXPECT_EQ(p->predicted.names(), kAttrs);
      EXPECT_EQ(p->predicted.length(), w.workload.size());
      EXPECT_EQ(p->predicted.start_index(), 1);
    }
    const auto& entries = w.experience.plan.entries;
    for (std::size_t i = 0; i < w.workload.size(); ++i) {
      const std::size_t m = spd.matched_entry[i];
      ASSERT_LT(m, entries.size());
      // Brute force: no entry is strictly closer, and no earlier entry ties.
      const double best = std::fabs(w.workload[i] - entries[m].demand);
      for (std::size_t j = 0; j < entries.size(); ++j) {
        const double d = std::fabs(w.workload[i] - entries[j].demand);
        if (j < m) {
          EXPECT_GT(d, best);
        } else {
          EXPECT_GE(d, best);
        }
      }
    }
  });
}

TEST(DiscoveryProperty, SpdIsLpdTimesSignatureRatio) {
  for_cases(56, [](Rng& rng) {
    World w = random_world(rng);
    const auto spd = spd_discover(w.workload, w.experience, w.signature);
    const auto lpd = lpd_discover(w.workload, w.experience);
    for (const auto& a : kAttrs) {
      for (std::size_t i = 0; i < w.workload.size(); ++i) {
        const auto& e = w.experience.plan.entries[spd.matched_entry[i]];
        const double ratio = w.signature.matrix.at(a)[i] / w.signature.value(a, w.experience.executed_at(e));
        EXPECT_NEAR(spd.predicted.at(a)[i], lpd.predicted.at(a)[i] * ratio,
                    1e-12 * std::fabs(lpd.predicted.at(a)[i] * ratio));
      }
    }
  });
}
