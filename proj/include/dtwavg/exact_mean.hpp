#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "dtwavg/mean_result.hpp"
#include "dtwavg/time_series.hpp"

namespace dtwavg {

/// Fréchet function of a sample: the sum of squared dtw-distances from z to
/// every member (no normalising factor).
double frechet(const Sample& sample, const TimeSeries& z);

struct BlockCost {
  double mean;  ///< arithmetic mean of the values
  double cost;  ///< sum of squared deviations from the mean
};

/// Optimal constant for a multiset of values. Throws on an empty input.
BlockCost block_cost(std::span<const double> values);

/// Contiguous 0-based index range [first, last] of one member matched to one
/// mean element.
struct Block {
  std::size_t first;
  std::size_t last;
  friend bool operator==(const Block&, const Block&) = default;
};

/// Joint alignment of a mean to every member: blocks[t][j] is the range of
/// member j matched to mean element t.
struct MeanAlignment {
  std::vector<std::vector<Block>> blocks;

  std::size_t length() const noexcept { return blocks.size(); }
  /// Warping path of order length() x n_j for member j.
  WarpingPath path(std::size_t member) const;
};

/// Size limits for the exact dynamic program. The k=2 and k=3 defaults take
/// roughly a second each on a current desktop core.
struct ExactGuard {
  std::size_t max_length_pair = 120;
  std::size_t max_length_triple = 24;
  /// Disables the length limits altogether.
  bool allow_slow = false;
};

/// Throws std::invalid_argument unless members is 2 or 3 and GuardError when
/// a series of length `longest` is above the guard.
void check_exact_guard(std::size_t members, std::size_t longest, const ExactGuard& guard);

/// Exact sample mean for k = 2 or k = 3 series.
///
/// Dynamic program over tuples of last-matched indices. Each transition
/// appends one mean element whose block in member j is [e_j + 1 - r_j, e'_j]
/// (r_j = 1 re-uses the previous end index) and costs block_cost() of the
/// union of the blocks. Every mean element must consume at least one index not
/// matched before, which bounds the mean length by sum(n_j) - k + 1 and loses
/// nothing: an element made only of repeated indices can be deleted without
/// raising the cost.
///
/// Among optimal means the shortest one is returned; remaining ties follow the
/// enumeration order of transitions. Throws GuardError when the instance is
/// above the guard and std::invalid_argument for k outside {2, 3}.
MeanResult exact_mean_dp(const Sample& sample, const ExactGuard& guard = {});

/// Same as exact_mean_dp() but also returns the joint alignment.
MeanResult exact_mean_dp(const Sample& sample, const ExactGuard& guard,
                         MeanAlignment* alignment);

/// Exhaustive oracle: every mean length L in [1, max_length] and every tuple
/// of warping paths of order L x n_j, each mean element set to the mean of
/// the values matched to it. Branches are pruned once their partial cost
/// reaches the best complete cost, so the search is exact.
///
/// Tiny inputs only: k <= 3, n_j <= 4, max_length <= sum(n_j); GuardError
/// otherwise.
MeanResult exact_mean_bruteforce(const Sample& sample, std::size_t max_length);

}  // namespace dtwavg
