#include "sigsel/numeric.hpp"

#include <algorithm>
#include <functional>
#include <cmath>
#include <numeric>
#include <sstream>

#include "sigsel/error.hpp"

namespace sigsel {

namespace {

void require_same_nonempty(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) throw Error(ErrorKind::EmptySeries, "series must be non-empty");
  if (a.size() != b.size()) {
    std::ostringstream os;
    os << "series lengths differ (" << a.size() << " vs " << b.size() << ")";
    throw Error(ErrorKind::LengthMismatch, os.str());
  }
}

bool is_constant(std::span<const double> values) {
  return std::adjacent_find(values.begin(), values.end(), std::not_equal_to<>{}) == values.end();
}

double mean_of(std::span<const double> values) {
  return std::accumulate(values.begin(), values.end(), 0.0) /
         static_cast<double>(values.size());
}

}  // namespace

MinMaxResult min_max_normalize(const TimeSeries& series) {
  if (series.empty()) throw Error(ErrorKind::EmptySeries, "cannot min-max normalize an empty series");
  const double lo = series.min();
  const double hi = series.max();
  std::vector<double> out(series.size());
  if (hi == lo) {
    std::fill(out.begin(), out.end(), 0.5);
    return {TimeSeries(std::move(out), series.start_index()), true};
  }
  const double range = hi - lo;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = (series[i] - lo) / range;
  return {TimeSeries(std::move(out), series.start_index()), false};
}

double rmse(std::span<const double> a, std::span<const double> b) {
  require_same_nonempty(a, b);
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    sum += d * d;
  }
  return std::sqrt(sum / static_cast<double>(a.size()));
}

double rmse(const TimeSeries& a, const TimeSeries& b) { return rmse(a.values(), b.values()); }

double nrmse(const TimeSeries& reference, const TimeSeries& other) {
  require_same_nonempty(reference.values(), other.values());
  const double range = reference.max() - reference.min();
  if (range == 0.0) throw Error(ErrorKind::ZeroRange, "reference series has zero range");
  return rmse(reference, other) / range;
}

double population_stddev(std::span<const double> values) {
  if (values.empty()) throw Error(ErrorKind::EmptySeries, "stddev of empty series");
  if (is_constant(values)) return 0.0;
  const double mu = mean_of(values);
  double ss = 0.0;
  for (const double v : values) ss += (v - mu) * (v - mu);
  return std::sqrt(ss / static_cast<double>(values.size()));
}

TimeSeries std_normalize(const TimeSeries& series) {
  if (series.size() < 2) throw Error(ErrorKind::TooShort, "std normalization needs at least 2 samples");
  const double sigma = population_stddev(series.values());
  if (sigma == 0.0) throw Error(ErrorKind::ZeroVariance, "series has zero standard deviation");
  std::vector<double> out(series.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = series[i] / sigma;
  return TimeSeries(std::move(out), series.start_index());
}

double pearson(std::span<const double> a, std::span<const double> b) {
  require_same_nonempty(a, b);
  if (a.size() < 2) throw Error(ErrorKind::TooShort, "correlation needs at least 2 samples");
  if (is_constant(a) || is_constant(b)) {
    throw Error(ErrorKind::ZeroVariance, "correlation of a constant series");
  }
  const double ma = mean_of(a);
  const double mb = mean_of(b);
  double cov = 0.0, va = 0.0, vb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double da = a[i] - ma;
    const double db = b[i] - mb;
    cov += da * db;
    va += da * da;
    vb += db * db;
  }
  if (va == 0.0 || vb == 0.0) throw Error(ErrorKind::ZeroVariance, "correlation of a constant series");
  return std::clamp(cov / (std::sqrt(va) * std::sqrt(vb)), -1.0, 1.0);
}

double pearson(const TimeSeries& a, const TimeSeries& b) { return pearson(a.values(), b.values()); }

TimeSeries resample_mean(const TimeSeries& series, std::size_t factor) {
  if (factor == 0) throw Error(ErrorKind::InvalidArgument, "resample factor must be positive");
  if (factor == 1) return series;
  std::vector<double> out;
  out.reserve((series.size() + factor - 1) / factor);
  const auto values = series.values();
  for (std::size_t i = 0; i < values.size(); i += factor) {
    const std::size_t n = std::min(factor, values.size() - i);
    out.push_back(mean_of(values.subspan(i, n)));
  }
  return TimeSeries(std::move(out), series.start_index());
}

}  // namespace sigsel
