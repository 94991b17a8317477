#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace sigsel {

// Abstract time unit; one step is one day unless a caller resamples.
using Timestamp = std::int64_t;

// Inclusive [start, end] range of timestamps.
struct Window {
  Timestamp start = 1;
  Timestamp end = 0;

  std::size_t length() const noexcept {
    return end < start ? 0 : static_cast<std::size_t>(end - start + 1);
  }
  bool contains(Timestamp t) const noexcept { return t >= start && t <= end; }
  bool within(Timestamp lo, Timestamp hi) const noexcept {
    return start >= lo && end <= hi && start <= end;
  }

  friend bool operator==(const Window&, const Window&) = default;
};

// Uniformly sampled series. values()[i] is the sample at start_index() + i.
// Constructors reject non-finite samples; an empty series is allowed but inert.
class TimeSeries {
 public:
  TimeSeries() = default;
  explicit TimeSeries(std::vector<double> values, Timestamp start_index = 1);

  Timestamp start_index() const noexcept { return start_; }
  Timestamp end_index() const noexcept {
    return start_ + static_cast<Timestamp>(values_.size()) - 1;
  }
  Window window() const noexcept { return {start_, end_index()}; }

  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }

  std::span<const double> values() const noexcept { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }

  bool covers(Timestamp t) const noexcept { return !empty() && window().contains(t); }
  // Sample at absolute timestamp t; throws OutOfRange.
  double at_time(Timestamp t) const;

  // Sub-series [start, start + length - 1] in absolute time; throws OutOfRange.
  TimeSeries slice(Timestamp start, std::size_t length) const;

  double min() const;
  double max() const;

  friend bool operator==(const TimeSeries&, const TimeSeries&) = default;

 private:
  Timestamp start_ = 1;
  std::vector<double> values_;
};

// Named QoS series sharing one timestamp index. Iteration order is by
// attribute name.
class QoSMatrix {
 public:
  using Map = std::map<std::string, TimeSeries>;

  QoSMatrix() = default;

  // Throws LengthMismatch if the series disagrees with the existing rows and
  // InvalidArgument on a duplicate name.
  void insert(std::string name, TimeSeries series);

  bool contains(const std::string& name) const { return rows_.contains(name); }
  const TimeSeries& at(const std::string& name) const;

  std::vector<std::string> names() const;
  std::size_t attribute_count() const noexcept { return rows_.size(); }
  bool empty() const noexcept { return rows_.empty(); }

  // Common series length and start index (0 / 1 when empty).
  std::size_t length() const noexcept;
  Timestamp start_index() const noexcept;

  QoSMatrix slice(Timestamp start, std::size_t length) const;

  Map::const_iterator begin() const noexcept { return rows_.begin(); }
  Map::const_iterator end() const noexcept { return rows_.end(); }

  friend bool operator==(const QoSMatrix&, const QoSMatrix&) = default;

 private:
  Map rows_;
};

// Consumer resource demand per timestamp plus the capacity it is measured
// against. Demands are non-negative and capacity is positive.
class WorkloadSeries {
 public:
  WorkloadSeries() = default;
  WorkloadSeries(TimeSeries demands, double capacity);

  const TimeSeries& demands() const noexcept { return demands_; }
  double capacity() const noexcept { return capacity_; }
  std::size_t size() const noexcept { return demands_.size(); }
  double operator[](std::size_t i) const { return demands_[i]; }

  friend bool operator==(const WorkloadSeries&, const WorkloadSeries&) = default;

 private:
  TimeSeries demands_;
  double capacity_ = 1.0;
};

}  // namespace sigsel
