#pragma once

#include <cstddef>
#include <span>

#include "sigsel/timeseries.hpp"

namespace sigsel {

struct MinMaxResult {
  TimeSeries series;
  // Input had max == min; every output sample is 0.5.
  bool constant = false;
};

// (x - min) / (max - min). A constant series maps to 0.5 everywhere with the
// constant flag set. Throws EmptySeries.
MinMaxResult min_max_normalize(const TimeSeries& series);

// Root mean squared error, compared positionally. Throws EmptySeries or
// LengthMismatch.
double rmse(std::span<const double> a, std::span<const double> b);
double rmse(const TimeSeries& a, const TimeSeries& b);

// rmse(reference, other) / (max(reference) - min(reference)).
// Throws ZeroRange on a flat reference.
double nrmse(const TimeSeries& reference, const TimeSeries& other);

// Population standard deviation (divides by N).
double population_stddev(std::span<const double> values);

// series / sigma(series) without mean removal, so ratios between samples are
// preserved. Throws TooShort (< 2 samples) or ZeroVariance.
TimeSeries std_normalize(const TimeSeries& series);

// Pearson correlation clamped to [-1, 1]. Throws LengthMismatch, TooShort or
// ZeroVariance.
double pearson(std::span<const double> a, std::span<const double> b);
double pearson(const TimeSeries& a, const TimeSeries& b);

// Collapses every `factor` consecutive samples into their mean; a trailing
// partial block is averaged over what it has. Used to turn sub-daily traces
// into daily steps.
TimeSeries resample_mean(const TimeSeries& series, std::size_t factor);

}  // namespace sigsel
