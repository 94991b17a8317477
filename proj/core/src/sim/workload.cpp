#include "sigsel/sim/workload.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cmath>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <string_view>
#include <vector>

#include "sigsel/error.hpp"
#include "sigsel/numeric.hpp"

namespace sigsel::sim {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void parse_fail(const std::string& source, std::size_t line, const std::string& what) {
  std::ostringstream os;
  os << source << ":" << line << ": " << what;
  throw Error(ErrorKind::ParseError, os.str());
}

double parse_number(std::string_view text, const std::string& source, std::size_t line) {
  // strtod accepts nan/inf spellings, which are reported separately.
  const std::string buf(text);
  char* end = nullptr;
  const double v = std::strtod(buf.c_str(), &end);
  if (buf.empty() || end != buf.c_str() + buf.size()) {
    parse_fail(source, line, "not a number: '" + buf + "'");
  }
  if (!std::isfinite(v)) {
    std::ostringstream os;
    os << source << ":" << line << ": demand '" << buf << "' is not finite";
    throw Error(ErrorKind::NonFiniteValue, os.str());
  }
  return v;
}

std::optional<double> capacity_comment(std::string_view comment) {
  comment = trim(comment.substr(1));
  constexpr std::string_view kKey = "capacity:";
  if (comment.substr(0, kKey.size()) != kKey) return std::nullopt;
  const std::string value(trim(comment.substr(kKey.size())));
  char* end = nullptr;
  const double v = std::strtod(value.c_str(), &end);
  if (value.empty() || end != value.c_str() + value.size() || !std::isfinite(v)) return std::nullopt;
  return v;
}

}  // namespace

WorkloadSeries read_workload_csv(std::istream& in, const WorkloadCsvOptions& options,
                                 const std::string& source) {
  std::optional<double> capacity = options.capacity;
  std::optional<Timestamp> first_t;
  Timestamp expected_t = 0;
  std::vector<double> demands;
  bool header_seen = false;

  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      if (!options.capacity) {
        if (auto c = capacity_comment(line)) capacity = c;
      }
      continue;
    }
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = trim(line.substr(0, hash));
    if (!header_seen) {
      if (line != "t,demand") parse_fail(source, line_no, "expected header 't,demand'");
      header_seen = true;
      continue;
    }
    const auto comma = line.find(',');
    if (comma == std::string_view::npos || line.find(',', comma + 1) != std::string_view::npos) {
      parse_fail(source, line_no, "expected two comma-separated fields");
    }
    const std::string_view t_text = trim(line.substr(0, comma));
    Timestamp t = 0;
    const auto [ptr, ec] = std::from_chars(t_text.data(), t_text.data() + t_text.size(), t);
    if (ec != std::errc{} || ptr != t_text.data() + t_text.size()) {
      parse_fail(source, line_no, "timestamp is not an integer: '" + std::string(t_text) + "'");
    }
    if (first_t && t != expected_t) {
      std::ostringstream os;
      os << "timestamp " << t << " breaks uniform sampling (expected " << expected_t << ")";
      parse_fail(source, line_no, os.str());
    }
    if (!first_t) first_t = t;
    expected_t = t + 1;
    const double d = parse_number(trim(line.substr(comma + 1)), source, line_no);
    if (d < 0.0) parse_fail(source, line_no, "demand must be non-negative");
    demands.push_back(d);
  }
  if (!header_seen) parse_fail(source, line_no, "missing header 't,demand'");
  if (demands.empty()) parse_fail(source, line_no, "no workload rows");
  if (!capacity) {
    throw Error(ErrorKind::MissingCapacity,
                source + ": no capacity given (use a '# capacity: <value>' comment or an override)");
  }

  TimeSeries series(std::move(demands), *first_t);
  series = resample_mean(series, options.samples_per_step);
  if (options.expand_to) series = expand_cyclic(series, *options.expand_to);
  return WorkloadSeries(std::move(series), *capacity);
}

WorkloadSeries ingest_workload_csv(const std::filesystem::path& path, const WorkloadCsvOptions& options) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open workload file '" + path.string() + "'");
  return read_workload_csv(in, options, path.string());
}

void write_workload_csv(std::ostream& out, const WorkloadSeries& workload) {
  char cap[32];
  const auto c = std::to_chars(cap, cap + sizeof cap, workload.capacity());
  out << "# capacity: " << std::string_view(cap, c.ptr) << "\n";
  out << "t,demand\n";
  const Timestamp start = workload.demands().start_index();
  for (std::size_t i = 0; i < workload.size(); ++i) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, workload[i]);
    out << start + static_cast<Timestamp>(i) << "," << std::string_view(buf, res.ptr) << "\n";
  }
}

TimeSeries expand_cyclic(const TimeSeries& series, std::size_t horizon) {
  if (series.empty()) throw Error(ErrorKind::EmptySeries, "cannot expand an empty series");
  std::vector<double> out(horizon);
  for (std::size_t i = 0; i < horizon; ++i) out[i] = series[i % series.size()];
  return TimeSeries(std::move(out), series.start_index());
}

WorkloadSeries zipf_workload(const ZipfWorkloadSpec& spec, std::uint64_t seed) {
  if (spec.horizon == 0 || spec.distinct == 0) {
    throw Error(ErrorKind::InvalidArgument, "zipf workload needs a positive horizon and level count");
  }
  std::mt19937_64 rng(seed);
  std::vector<double> values(spec.distinct);
  for (std::size_t j = 0; j < spec.distinct; ++j) {
    const double raw = spec.capacity * static_cast<double>(j + 1) / static_cast<double>(spec.distinct + 1);
    values[j] = std::round(raw * 100.0) / 100.0;
  }
  std::vector<std::size_t> popularity(spec.distinct);
  std::iota(popularity.begin(), popularity.end(), std::size_t{0});
  std::shuffle(popularity.begin(), popularity.end(), rng);

  std::vector<double> weights(spec.distinct);
  for (std::size_t r = 0; r < spec.distinct; ++r) {
    weights[r] = 1.0 / std::pow(static_cast<double>(r + 1), spec.exponent);
  }
  std::discrete_distribution<std::size_t> pick(weights.begin(), weights.end());
  std::vector<double> demands(spec.horizon);
  for (double& d : demands) d = values[popularity[pick(rng)]];
  return WorkloadSeries(TimeSeries(std::move(demands), 1), spec.capacity);
}

}  // namespace sigsel::sim
