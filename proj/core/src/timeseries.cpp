#include "sigsel/timeseries.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "sigsel/error.hpp"

namespace sigsel {

TimeSeries::TimeSeries(std::vector<double> values, Timestamp start_index)
    : start_(start_index), values_(std::move(values)) {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      std::ostringstream os;
      os << "sample at timestamp " << start_ + static_cast<Timestamp>(i)
         << " is not finite";
      throw Error(ErrorKind::NonFiniteValue, os.str());
    }
  }
}

double TimeSeries::at_time(Timestamp t) const {
  if (!covers(t)) {
    std::ostringstream os;
    os << "timestamp " << t << " outside [" << start_ << ", " << end_index() << "]";
    throw Error(ErrorKind::OutOfRange, os.str());
  }
  return values_[static_cast<std::size_t>(t - start_)];
}

TimeSeries TimeSeries::slice(Timestamp start, std::size_t length) const {
  const Timestamp last = start + static_cast<Timestamp>(length) - 1;
  if (length == 0 || !covers(start) || !covers(last)) {
    std::ostringstream os;
    os << "slice [" << start << ", " << last << "] outside [" << start_ << ", "
       << end_index() << "]";
    throw Error(ErrorKind::OutOfRange, os.str());
  }
  const auto first = values_.begin() + (start - start_);
  return TimeSeries(std::vector<double>(first, first + static_cast<std::ptrdiff_t>(length)),
                    start);
}

double TimeSeries::min() const {
  if (empty()) throw Error(ErrorKind::EmptySeries, "min of empty series");
  return *std::min_element(values_.begin(), values_.end());
}

double TimeSeries::max() const {
  if (empty()) throw Error(ErrorKind::EmptySeries, "max of empty series");
  return *std::max_element(values_.begin(), values_.end());
}

void QoSMatrix::insert(std::string name, TimeSeries series) {
  if (rows_.contains(name)) {
    throw Error(ErrorKind::InvalidArgument, "duplicate QoS attribute '" + name + "'");
  }
  if (!rows_.empty()) {
    const TimeSeries& first = rows_.begin()->second;
    if (first.size() != series.size() || first.start_index() != series.start_index()) {
      std::ostringstream os;
      os << "attribute '" << name << "' spans [" << series.start_index() << ", "
         << series.end_index() << "] but the matrix spans [" << first.start_index()
         << ", " << first.end_index() << "]";
      throw Error(ErrorKind::LengthMismatch, os.str());
    }
  }
  rows_.emplace(std::move(name), std::move(series));
}

const TimeSeries& QoSMatrix::at(const std::string& name) const {
  const auto it = rows_.find(name);
  if (it == rows_.end()) {
    throw Error(ErrorKind::AttributeMismatch, "no QoS attribute '" + name + "'");
  }
  return it->second;
}

std::vector<std::string> QoSMatrix::names() const {
  std::vector<std::string> out;
  out.reserve(rows_.size());
  for (const auto& [name, _] : rows_) out.push_back(name);
  return out;
}

std::size_t QoSMatrix::length() const noexcept {
  return rows_.empty() ? 0 : rows_.begin()->second.size();
}

Timestamp QoSMatrix::start_index() const noexcept {
  return rows_.empty() ? 1 : rows_.begin()->second.start_index();
}

QoSMatrix QoSMatrix::slice(Timestamp start, std::size_t length) const {
  QoSMatrix out;
  for (const auto& [name, series] : rows_) out.insert(name, series.slice(start, length));
  return out;
}

WorkloadSeries::WorkloadSeries(TimeSeries demands, double capacity)
    : demands_(std::move(demands)), capacity_(capacity) {
  if (!(capacity_ > 0.0) || !std::isfinite(capacity_)) {
    throw Error(ErrorKind::InvalidArgument, "workload capacity must be positive and finite");
  }
  for (std::size_t i = 0; i < demands_.size(); ++i) {
    if (demands_[i] < 0.0) {
      std::ostringstream os;
      os << "negative demand " << demands_[i] << " at timestamp "
         << demands_.start_index() + static_cast<Timestamp>(i);
      throw Error(ErrorKind::InvalidArgument, os.str());
    }
  }
}

}  // namespace sigsel
