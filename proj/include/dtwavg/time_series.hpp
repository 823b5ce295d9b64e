#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace dtwavg {

/// Univariate real-valued time series. Always non-empty with finite values.
class TimeSeries {
 public:
  /// Throws std::invalid_argument on empty input or non-finite values.
  explicit TimeSeries(std::vector<double> values);
  TimeSeries(std::initializer_list<double> values);

  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const noexcept { return values_[i]; }
  std::span<const double> values() const noexcept { return values_; }
  const std::vector<double>& vector() const noexcept { return values_; }

  auto begin() const noexcept { return values_.begin(); }
  auto end() const noexcept { return values_.end(); }

  /// Element-wise multiplication by a scalar.
  TimeSeries scaled(double factor) const;

  friend bool operator==(const TimeSeries&, const TimeSeries&) = default;

 private:
  std::vector<double> values_;
};

/// An ordered collection of time series, the input of every averaging routine.
using Sample = std::vector<TimeSeries>;

/// Scales every member of a sample.
Sample scaled(const Sample& sample, double factor);

}  // namespace dtwavg
