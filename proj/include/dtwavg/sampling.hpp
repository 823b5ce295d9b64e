#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "dtwavg/dataset.hpp"

namespace dtwavg {

/// Seed of one trial, a pure function of (master seed, dataset name, trial).
/// Results therefore do not depend on the order in which trials run.
std::uint64_t trial_seed(std::uint64_t master_seed, std::string_view dataset,
                         std::size_t trial);

/// Draws `tuple_size` distinct indices out of [0, population) from a trial seed.
std::vector<std::size_t> draw_tuple(std::size_t population, std::size_t tuple_size,
                                    std::uint64_t seed);

/// `trials` tuples of distinct indices. Tuples are independent across trials,
/// so the same tuple may appear twice. Throws std::invalid_argument for
/// tuple_size outside {2, 3} and DataError if the dataset is too small.
std::vector<std::vector<std::size_t>> sample_tuples(const Dataset& dataset,
                                                    std::size_t tuple_size,
                                                    std::size_t trials,
                                                    std::uint64_t seed);

}  // namespace dtwavg
