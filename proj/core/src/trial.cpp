#include "sigsel/trial.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "sigsel/error.hpp"

namespace sigsel {

std::string_view to_string(Level level) {
  switch (level) {
    case Level::Low: return "LOW";
    case Level::Medium: return "MEDIUM";
    case Level::High: return "HIGH";
  }
  return "LOW";
}

std::optional<Level> parse_level(std::string_view text) {
  if (text == "LOW") return Level::Low;
  if (text == "MEDIUM") return Level::Medium;
  if (text == "HIGH") return Level::High;
  return std::nullopt;
}

std::string_view to_string(Scheme scheme) {
  switch (scheme) {
    case Scheme::FG: return "FG";
    case Scheme::RG: return "RG";
    case Scheme::MG: return "MG";
    case Scheme::EQ: return "EQ";
  }
  return "FG";
}

std::optional<Scheme> parse_scheme(std::string_view text) {
  if (text == "FG") return Scheme::FG;
  if (text == "RG") return Scheme::RG;
  if (text == "MG") return Scheme::MG;
  if (text == "EQ") return Scheme::EQ;
  return std::nullopt;
}

Level level_of(double demand, double capacity, const LevelThresholds& thresholds) {
  if (!(capacity > 0.0)) throw Error(ErrorKind::InvalidArgument, "capacity must be positive");
  if (demand < 0.0) throw Error(ErrorKind::InvalidArgument, "demand must be non-negative");
  const double usage = demand / capacity;
  if (usage < thresholds.low_upper) return Level::Low;
  if (usage < thresholds.medium_upper) return Level::Medium;
  return Level::High;
}

std::vector<WorkloadInfo> characterize(const WorkloadSeries& workload,
                                       const LevelThresholds& thresholds) {
  if (workload.size() == 0) throw Error(ErrorKind::EmptyWorkload, "workload has no demands");
  std::map<double, WorkloadInfo> unique;
  const Timestamp start = workload.demands().start_index();
  for (std::size_t i = 0; i < workload.size(); ++i) {
    const double d = workload[i];
    auto [it, inserted] = unique.try_emplace(d);
    if (inserted) {
      it->second.demand = d;
      it->second.level = level_of(d, workload.capacity(), thresholds);
      it->second.first_occurrence = start + static_cast<Timestamp>(i);
    }
    ++it->second.frequency;
  }
  std::vector<WorkloadInfo> out;
  out.reserve(unique.size());
  for (auto& [_, info] : unique) out.push_back(info);
  return out;
}

namespace {

// Indices into `infos` ordered by significance.
std::vector<std::size_t> frequency_order(const std::vector<WorkloadInfo>& infos) {
  std::vector<std::size_t> order(infos.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (infos[a].frequency != infos[b].frequency) return infos[a].frequency > infos[b].frequency;
    return infos[a].demand > infos[b].demand;
  });
  return order;
}

std::vector<std::size_t> demand_order(const std::vector<WorkloadInfo>& infos) {
  // characterize() is ascending by demand, so walk it backwards.
  std::vector<std::size_t> order(infos.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = infos.size() - 1 - i;
  return order;
}

void pad_round_robin(std::vector<std::size_t>& picks, const std::vector<std::size_t>& ranking,
                     std::size_t k) {
  for (std::size_t i = 0; picks.size() < k; ++i) picks.push_back(ranking[i % ranking.size()]);
}

std::vector<std::size_t> mixed_picks(const std::vector<std::size_t>& by_freq,
                                     const std::vector<std::size_t>& by_demand, std::size_t k) {
  const std::size_t fg_count = std::min(k / 2, by_freq.size());
  const std::size_t rg_count = std::min(k - k / 2, by_demand.size());
  std::vector<std::size_t> picks(by_freq.begin(),
                                 by_freq.begin() + static_cast<std::ptrdiff_t>(fg_count));
  auto taken = [&](std::size_t idx) {
    return std::find(picks.begin(), picks.end(), idx) != picks.end();
  };
  std::size_t duplicates = 0;
  for (std::size_t i = 0; i < rg_count; ++i) {
    if (taken(by_demand[i])) {
      ++duplicates;
    } else {
      picks.push_back(by_demand[i]);
    }
  }
  for (std::size_t i = fg_count; i < by_freq.size() && duplicates > 0; ++i) {
    if (!taken(by_freq[i])) {
      picks.push_back(by_freq[i]);
      --duplicates;
    }
  }
  return picks;
}

}  // namespace

TrialPlan select_trial_workloads(const WorkloadSeries& workload, std::size_t trial_length,
                                 Scheme scheme, const LevelThresholds& thresholds) {
  if (scheme == Scheme::EQ) {
    throw Error(ErrorKind::InvalidArgument, "EQ plans need a VM count; use select_trial_workloads_eq");
  }
  if (workload.size() == 0) throw Error(ErrorKind::EmptyWorkload, "workload has no demands");
  if (trial_length == 0) throw Error(ErrorKind::InvalidArgument, "trial length must be at least 1");
  if (trial_length > workload.size()) {
    std::ostringstream os;
    os << "trial length " << trial_length << " exceeds workload length " << workload.size();
    throw Error(ErrorKind::TrialTooLong, os.str());
  }

  const std::vector<WorkloadInfo> infos = characterize(workload, thresholds);
  const std::vector<std::size_t> by_freq = frequency_order(infos);
  const std::vector<std::size_t> by_demand = demand_order(infos);

  std::vector<std::size_t> picks;
  switch (scheme) {
    case Scheme::FG:
      picks.assign(by_freq.begin(),
                   by_freq.begin() + static_cast<std::ptrdiff_t>(std::min(trial_length, by_freq.size())));
      break;
    case Scheme::RG:
      picks.assign(by_demand.begin(),
                   by_demand.begin() + static_cast<std::ptrdiff_t>(std::min(trial_length, by_demand.size())));
      break;
    case Scheme::MG:
      picks = mixed_picks(by_freq, by_demand, trial_length);
      break;
    case Scheme::EQ:
      break;
  }
  pad_round_robin(picks, by_freq, trial_length);

  std::stable_sort(picks.begin(), picks.end(),
                   [&](std::size_t a, std::size_t b) { return infos[a].demand < infos[b].demand; });

  TrialPlan plan;
  plan.scheme = scheme;
  plan.trial_length = trial_length;
  plan.vm_count = 1;
  plan.entries.reserve(trial_length);
  for (std::size_t i = 0; i < picks.size(); ++i) {
    const WorkloadInfo& info = infos[picks[i]];
    plan.entries.push_back({0, i + 1, info.demand, info.first_occurrence, info.level});
  }
  return plan;
}

TrialPlan select_trial_workloads_eq(const WorkloadSeries& workload, std::size_t trial_length,
                                    std::size_t vm_count, const LevelThresholds& thresholds) {
  if (vm_count == 0) throw Error(ErrorKind::InvalidArgument, "EQ needs at least one VM");
  if (trial_length == 0) throw Error(ErrorKind::InvalidArgument, "trial length must be at least 1");
  if (workload.size() == 0) throw Error(ErrorKind::EmptyWorkload, "workload has no demands");
  if (workload.size() < vm_count) {
    std::ostringstream os;
    os << "cannot split " << workload.size() << " workloads across " << vm_count << " VMs";
    throw Error(ErrorKind::TooFewWorkloads, os.str());
  }

  TrialPlan plan;
  plan.scheme = Scheme::EQ;
  plan.trial_length = trial_length;
  plan.vm_count = vm_count;
  plan.entries.reserve(trial_length * vm_count);

  const std::size_t n = workload.size();
  const std::size_t base = n / vm_count;
  const Timestamp origin = workload.demands().start_index();
  for (std::size_t vm = 0; vm < vm_count; ++vm) {
    const std::size_t first = vm * base;
    const std::size_t size = (vm + 1 == vm_count) ? n - first : base;
    for (std::size_t slot = 0; slot < trial_length; ++slot) {
      // Uniform stride when the partition is longer than the trial, otherwise
      // the partition is replayed from the start.
      const std::size_t offset = size >= trial_length ? slot * size / trial_length : slot % size;
      const std::size_t idx = first + offset;
      const double d = workload[idx];
      plan.entries.push_back({vm, slot + 1, d, origin + static_cast<Timestamp>(idx),
                              level_of(d, workload.capacity(), thresholds)});
    }
  }
  return plan;
}

}  // namespace sigsel
