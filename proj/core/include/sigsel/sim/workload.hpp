#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "sigsel/timeseries.hpp"

namespace sigsel::sim {

// Workload CSV: header `t,demand`, one row per sample with consecutive t,
// `#` starts a comment. A `# capacity: <value>` comment supplies capacity.
struct WorkloadCsvOptions {
  std::optional<double> capacity;      // overrides the header comment
  std::size_t samples_per_step = 1;    // rows averaged into one timestamp
  std::optional<std::size_t> expand_to;  // cyclic tiling of the (resampled) trace
};

// Throws ParseError (with line number), NonFiniteValue, MissingCapacity.
WorkloadSeries read_workload_csv(std::istream& in, const WorkloadCsvOptions& options,
                                 const std::string& source = "<stream>");
// Throws Io when the file cannot be opened.
WorkloadSeries ingest_workload_csv(const std::filesystem::path& path, const WorkloadCsvOptions& options);

void write_workload_csv(std::ostream& out, const WorkloadSeries& workload);

// Repeats the series until it is `horizon` long; starts at the series' start index.
TimeSeries expand_cyclic(const TimeSeries& series, std::size_t horizon);

// Demands drawn from `distinct` evenly spaced levels in (0, capacity] with
// Zipf(exponent) popularity over a random permutation of the levels.
struct ZipfWorkloadSpec {
  std::size_t horizon = 360;
  std::size_t distinct = 200;
  double exponent = 1.1;
  double capacity = 100.0;
};

WorkloadSeries zipf_workload(const ZipfWorkloadSpec& spec, std::uint64_t seed);

}  // namespace sigsel::sim
