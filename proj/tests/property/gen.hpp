#pragma once

// Seeded generators shared by the property suites.

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "sigsel/timeseries.hpp"

namespace sigsel::testgen {

inline constexpr int kCases = 100;

using Rng = std::mt19937_64;

// Runs body for kCases independent seeds, tagging failures with the case number.
inline void for_cases(std::uint64_t suite_seed, const std::function<void(Rng&)>& body, int cases = kCases) {
  for (int c = 0; c < cases; ++c) {
    SCOPED_TRACE("case " + std::to_string(c));
    Rng rng(suite_seed * 1000003ULL + static_cast<std::uint64_t>(c));
    body(rng);
    if (::testing::Test::HasFatalFailure()) return;
  }
}

inline std::size_t size_in(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline double real_in(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

inline std::vector<double> reals(Rng& rng, std::size_t n, double lo, double hi) {
  std::vector<double> v(n);
  for (auto& x : v) x = real_in(rng, lo, hi);
  return v;
}

// Non-constant series (two distinct draws are forced apart).
inline TimeSeries varied(Rng& rng, std::size_t n, double lo, double hi) {
  auto v = reals(rng, n, lo, hi);
  if (n >= 2) {
    v[0] = lo;
    v[1] = hi;
    std::shuffle(v.begin(), v.end(), rng);
  }
  return TimeSeries(v);
}

// Demands drawn from a small pool so that repeats and ties are common.
inline std::vector<double> pooled_demands(Rng& rng, std::size_t n, std::size_t pool, double capacity) {
  std::vector<double> levels(pool);
  for (auto& l : levels) l = std::round(real_in(rng, 0.0, capacity) * 4.0) / 4.0;
  std::vector<double> out(n);
  std::uniform_int_distribution<std::size_t> pick(0, pool - 1);
  for (auto& d : out) d = levels[pick(rng)];
  return out;
}

inline double max_abs_diff(std::span<const double> a, std::span<const double> b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::fabs(a[i] - b[i]));
  return m;
}

inline double max_rel_diff(std::span<const double> a, std::span<const double> b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::fabs(a[i] - b[i]) / std::max(1e-300, std::fabs(b[i])));
  return m;
}

}  // namespace sigsel::testgen
