#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "sigsel/timeseries.hpp"

namespace sigsel {

enum class Level { Low, Medium, High };

std::string_view to_string(Level level);
std::optional<Level> parse_level(std::string_view text);

// Fractions of capacity at which a demand moves up a level.
struct LevelThresholds {
  double low_upper = 1.0 / 3.0;
  double medium_upper = 2.0 / 3.0;
};

// Demands above capacity are still High.
Level level_of(double demand, double capacity, const LevelThresholds& thresholds = {});

struct WorkloadInfo {
  double demand = 0.0;
  std::size_t frequency = 0;
  Level level = Level::Low;
  Timestamp first_occurrence = 0;
};

// One entry per distinct demand value, ascending by demand. Throws EmptyWorkload.
std::vector<WorkloadInfo> characterize(const WorkloadSeries& workload,
                                       const LevelThresholds& thresholds = {});

enum class Scheme { FG, RG, MG, EQ };

std::string_view to_string(Scheme scheme);
std::optional<Scheme> parse_scheme(std::string_view text);

struct TrialEntry {
  std::size_t vm = 0;            // trial VM running this entry (always 0 outside EQ)
  std::size_t slot = 1;          // 1-based trial day
  double demand = 0.0;
  Timestamp source_timestamp = 0;  // where this demand occurs in the long-term workload
  Level level = Level::Low;

  friend bool operator==(const TrialEntry&, const TrialEntry&) = default;
};

struct TrialPlan {
  Scheme scheme = Scheme::FG;
  std::size_t trial_length = 0;
  std::size_t vm_count = 1;
  // FG/RG/MG: trial_length entries ordered by demand. EQ: vm_count blocks of
  // trial_length entries, block i belonging to VM i.
  std::vector<TrialEntry> entries;

  friend bool operator==(const TrialPlan&, const TrialPlan&) = default;
};

// Significance-based selection of trial_length demands from the workload.
// Throws EmptyWorkload, TrialTooLong, or InvalidArgument for EQ / zero length.
TrialPlan select_trial_workloads(const WorkloadSeries& workload, std::size_t trial_length,
                                 Scheme scheme, const LevelThresholds& thresholds = {});

// Equivalence-partitioning baseline: the workload is cut into vm_count
// contiguous partitions and each is squeezed into trial_length slots.
// Throws TooFewWorkloads when the workload is shorter than vm_count.
TrialPlan select_trial_workloads_eq(const WorkloadSeries& workload, std::size_t trial_length,
                                    std::size_t vm_count, const LevelThresholds& thresholds = {});

}  // namespace sigsel
