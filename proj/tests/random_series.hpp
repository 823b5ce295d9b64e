#pragma once

// Generators shared by the property-style tests.

#include <cstddef>
#include <random>
#include <vector>

#include "dtwavg/time_series.hpp"

namespace dtwavg::testing {

inline TimeSeries random_integer_series(std::mt19937_64& rng, std::size_t length, int lo, int hi) {
  std::uniform_int_distribution<int> value(lo, hi);
  std::vector<double> v(length);
  for (auto& x : v) x = value(rng);
  return TimeSeries(std::move(v));
}

inline TimeSeries random_real_series(std::mt19937_64& rng, std::size_t length, double lo = -5.0,
                                     double hi = 5.0) {
  std::uniform_real_distribution<double> value(lo, hi);
  std::vector<double> v(length);
  for (auto& x : v) x = value(rng);
  return TimeSeries(std::move(v));
}

inline TimeSeries random_walk(std::mt19937_64& rng, std::size_t length) {
  std::normal_distribution<double> step(0.0, 1.0);
  std::vector<double> v(length);
  double level = step(rng);
  for (auto& x : v) {
    x = level;
    level += step(rng);
  }
  return TimeSeries(std::move(v));
}

inline std::size_t random_size(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

/// Sample of k integer-valued series with lengths in [1, max_length].
inline Sample random_integer_sample(std::mt19937_64& rng, std::size_t k, std::size_t max_length,
                                    int lo, int hi) {
  Sample s;
  for (std::size_t j = 0; j < k; ++j) {
    s.push_back(random_integer_series(rng, random_size(rng, 1, max_length), lo, hi));
  }
  return s;
}

}  // namespace dtwavg::testing
