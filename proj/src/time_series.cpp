#include "dtwavg/time_series.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace dtwavg {

TimeSeries::TimeSeries(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) {
    throw std::invalid_argument("time series must contain at least one value");
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      throw std::invalid_argument("time series value " + std::to_string(i) + " is not finite");
    }
  }
}

TimeSeries::TimeSeries(std::initializer_list<double> values)
    : TimeSeries(std::vector<double>(values)) {}

TimeSeries TimeSeries::scaled(double factor) const {
  std::vector<double> out(values_);
  for (auto& v : out) v *= factor;
  return TimeSeries(std::move(out));
}

Sample scaled(const Sample& sample, double factor) {
  Sample out;
  out.reserve(sample.size());
  for (const auto& x : sample) out.push_back(x.scaled(factor));
  return out;
}

}  // namespace dtwavg
