#include "dtwavg/sampling.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

#include "dtwavg/errors.hpp"
#include "rng.hpp"

namespace dtwavg {

std::uint64_t trial_seed(std::uint64_t master_seed, std::string_view dataset, std::size_t trial) {
  std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
  for (const unsigned char c : dataset) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::uint64_t s = detail::splitmix64(master_seed);
  s = detail::splitmix64(s ^ h);
  return detail::splitmix64(s ^ static_cast<std::uint64_t>(trial));
}

std::vector<std::size_t> draw_tuple(std::size_t population, std::size_t tuple_size,
                                    std::uint64_t seed) {
  if (tuple_size > population) {
    throw DataError("cannot draw " + std::to_string(tuple_size) + " distinct series out of " +
                    std::to_string(population));
  }
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> out;
  out.reserve(tuple_size);
  while (out.size() < tuple_size) {
    const auto i = static_cast<std::size_t>(detail::bounded(rng, population));
    if (std::find(out.begin(), out.end(), i) == out.end()) out.push_back(i);
  }
  return out;
}

std::vector<std::vector<std::size_t>> sample_tuples(const Dataset& dataset, std::size_t tuple_size,
                                                    std::size_t trials, std::uint64_t seed) {
  if (tuple_size != 2 && tuple_size != 3) {
    throw std::invalid_argument("tuple size must be 2 or 3");
  }
  if (dataset.size() < tuple_size) {
    throw DataError("dataset '" + dataset.name() + "' has " + std::to_string(dataset.size()) +
                    " series, fewer than the tuple size " + std::to_string(tuple_size));
  }
  std::vector<std::vector<std::size_t>> out;
  out.reserve(trials);
  for (std::size_t t = 0; t < trials; ++t) {
    out.push_back(draw_tuple(dataset.size(), tuple_size, trial_seed(seed, dataset.name(), t)));
  }
  return out;
}

}  // namespace dtwavg
