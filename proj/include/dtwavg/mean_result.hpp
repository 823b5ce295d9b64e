#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "dtwavg/time_series.hpp"
#include "dtwavg/warping_path.hpp"

namespace dtwavg {

enum class MeanMethod { ExactDp, ExactBruteforce, Dba, Ssg };

std::string_view to_string(MeanMethod method);

/// Inverse of to_string().
std::optional<MeanMethod> parse_method(std::string_view name);

/// A candidate mean with its Fréchet value and run metadata.
struct MeanResult {
  explicit MeanResult(TimeSeries series, MeanMethod m = MeanMethod::ExactDp)
      : mean(std::move(series)), method(m) {}

  TimeSeries mean;
  double frechet_value = 0.0;
  MeanMethod method = MeanMethod::ExactDp;
  std::size_t iterations = 0;
  bool converged = false;
  /// One path per sample member, of order |mean| x |member|, when the method
  /// produces a certified alignment.
  std::optional<std::vector<WarpingPath>> alignment;
  /// Fréchet value of every iterate computed, starting with the initial
  /// series. Filled by the iterative heuristics only.
  std::vector<double> history;
};

}  // namespace dtwavg
