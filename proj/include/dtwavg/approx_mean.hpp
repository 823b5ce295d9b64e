#pragma once

#include <cstddef>
#include <cstdint>
#include <variant>

#include "dtwavg/mean_result.hpp"
#include "dtwavg/time_series.hpp"

namespace dtwavg {

struct MedoidInit {};
struct MemberInit {
  std::size_t index;
};
struct SeriesInit {
  TimeSeries series;
};

/// Starting point of a heuristic; its length fixes the length of the result.
using Initializer = std::variant<MedoidInit, MemberInit, SeriesInit>;

struct HeuristicConfig {
  std::size_t max_iterations = 200;
  double eta0 = 0.2;   ///< SSG learning rate at the first step
  double eta1 = 0.02;  ///< SSG learning rate at the last step
  double tolerance = 1e-12;  ///< DBA stops when F decreases by no more than this
  std::uint64_t seed = 0;
  Initializer init = MedoidInit{};

  /// Throws std::invalid_argument unless 0 < eta1 <= eta0 and max_iterations >= 1.
  void validate() const;
};

struct Medoid {
  std::size_t index;
  TimeSeries series;
  double frechet_value;
};

/// Sample member with the smallest Fréchet value; ties go to the lower index.
Medoid medoid(const Sample& sample);

/// Resolves an initializer against a sample.
TimeSeries initial_series(const Sample& sample, const Initializer& init);

/// DTW barycenter averaging.
///
/// Each iteration aligns the current mean to every member and replaces each
/// mean element by the average of the member values matched to it. Stops when
/// F decreases by at most cfg.tolerance, when the matched multisets repeat, or
/// after cfg.max_iterations updates. The Fréchet value never increases.
MeanResult dba(const Sample& sample, const HeuristicConfig& cfg = {});

/// Stochastic subgradient averaging.
///
/// Runs exactly cfg.max_iterations single-member steps. Members are visited in
/// a fresh random permutation per epoch. The learning rate falls linearly
/// from eta0 at step 0 to eta1 at the last step. Returns the best iterate seen,
/// including the initial series, so the result never exceeds F(init).
MeanResult ssg(const Sample& sample, const HeuristicConfig& cfg = {});

/// Learning rate for step t (0-based) of a run with the given configuration.
double ssg_learning_rate(const HeuristicConfig& cfg, std::size_t step);

}  // namespace dtwavg
