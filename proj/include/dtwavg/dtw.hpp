#pragma once

#include <cstddef>
#include <vector>

#include "dtwavg/time_series.hpp"
#include "dtwavg/warping_path.hpp"

namespace dtwavg {

struct DtwResult {
  double distance;  ///< square root of the optimal alignment cost
  double cost;      ///< optimal alignment cost (sum of squared differences)
  WarpingPath path;
};

/// Sum of squared differences of x and y along p. The path must have order
/// |x| x |y|, otherwise std::invalid_argument is thrown.
double cost_of_path(const TimeSeries& x, const TimeSeries& y, const WarpingPath& p);

/// Unconstrained dtw-distance with an optimal warping path.
///
/// Standard O(|x||y|) dynamic program over squared local costs. When several
/// optimal paths exist the backtrace prefers the diagonal predecessor, then
/// the vertical one (i-1, j), then the horizontal one (i, j-1).
DtwResult dtw(const TimeSeries& x, const TimeSeries& y);

/// Distance only; skips the backtrace.
double dtw_distance(const TimeSeries& x, const TimeSeries& y);

/// Squared distance (optimal alignment cost) only.
double dtw_cost(const TimeSeries& x, const TimeSeries& y);

/// Limits for exhaustive path enumeration.
struct EnumerationGuard {
  std::size_t max_rows = 8;
  std::size_t max_cols = 8;
};

/// Every warping path of order m x n, each exactly once, in lexicographic
/// order of their point sequences. Throws GuardError beyond the guard.
std::vector<WarpingPath> enumerate_paths(std::size_t m, std::size_t n,
                                         EnumerationGuard guard = {});

/// Distance by enumerating all warping paths. Validation oracle for dtw().
double dtw_bruteforce(const TimeSeries& x, const TimeSeries& y,
                      EnumerationGuard guard = {});

}  // namespace dtwavg
