#include "dtwavg/approx_mean.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

#include "dtwavg/dtw.hpp"
#include "dtwavg/exact_mean.hpp"
#include "rng.hpp"

namespace dtwavg {

void HeuristicConfig::validate() const {
  if (max_iterations < 1) throw std::invalid_argument("max_iterations must be at least 1");
  if (!(eta1 > 0.0) || !(eta0 > 0.0)) throw std::invalid_argument("learning rates must be positive");
  if (eta1 > eta0) throw std::invalid_argument("eta1 must not exceed eta0");
  if (!(tolerance >= 0.0)) throw std::invalid_argument("tolerance must be nonnegative");
}

Medoid medoid(const Sample& sample) {
  if (sample.empty()) throw std::invalid_argument("medoid of an empty sample");
  std::size_t best = 0;
  double best_value = frechet(sample, sample[0]);
  for (std::size_t i = 1; i < sample.size(); ++i) {
    const double value = frechet(sample, sample[i]);
    if (value < best_value) {
      best = i;
      best_value = value;
    }
  }
  return {best, sample[best], best_value};
}

TimeSeries initial_series(const Sample& sample, const Initializer& init) {
  if (sample.empty()) throw std::invalid_argument("cannot average an empty sample");
  if (std::holds_alternative<MedoidInit>(init)) return medoid(sample).series;
  if (const auto* member = std::get_if<MemberInit>(&init)) {
    if (member->index >= sample.size()) {
      throw std::invalid_argument("initial member index " + std::to_string(member->index) +
                                  " out of range");
    }
    return sample[member->index];
  }
  return std::get<SeriesInit>(init).series;
}

namespace {

// Optimal alignment of z to every member, summarised as the multiset of
// member values matched to each element of z.
struct Alignment {
  double frechet_value = 0.0;
  std::vector<std::vector<double>> matched;
  std::vector<WarpingPath> paths;
};

Alignment align(const Sample& sample, const TimeSeries& z) {
  Alignment out;
  out.matched.resize(z.size());
  for (const auto& x : sample) {
    auto r = dtw(z, x);
    out.frechet_value += r.cost;
    for (const auto& [t, i] : r.path) out.matched[t].push_back(x[i]);
    out.paths.push_back(std::move(r.path));
  }
  for (auto& values : out.matched) std::sort(values.begin(), values.end());
  return out;
}

TimeSeries barycenter(const Alignment& a) {
  std::vector<double> z(a.matched.size());
  for (std::size_t t = 0; t < z.size(); ++t) z[t] = block_cost(a.matched[t]).mean;
  return TimeSeries(std::move(z));
}

}  // namespace

MeanResult dba(const Sample& sample, const HeuristicConfig& cfg) {
  cfg.validate();
  TimeSeries z = initial_series(sample, cfg.init);
  Alignment current = align(sample, z);

  MeanResult result{z};
  result.method = MeanMethod::Dba;
  result.history.push_back(current.frechet_value);

  for (std::size_t it = 1; it <= cfg.max_iterations; ++it) {
    TimeSeries next = barycenter(current);
    Alignment next_alignment = align(sample, next);
    result.iterations = it;

    const double decrease = current.frechet_value - next_alignment.frechet_value;
    if (decrease < 0.0) {
      // Rounding only; the update cannot increase F. Keep the previous iterate.
      result.history.push_back(next_alignment.frechet_value);
      result.converged = true;
      break;
    }
    const bool same_matching = next_alignment.matched == current.matched;
    z = std::move(next);
    current = std::move(next_alignment);
    result.history.push_back(current.frechet_value);
    if (decrease <= cfg.tolerance || same_matching) {
      result.converged = true;
      break;
    }
  }

  result.mean = std::move(z);
  result.frechet_value = current.frechet_value;
  result.alignment = std::move(current.paths);
  return result;
}

double ssg_learning_rate(const HeuristicConfig& cfg, std::size_t step) {
  if (cfg.max_iterations <= 1) return cfg.eta0;
  const double fraction =
      static_cast<double>(step) / static_cast<double>(cfg.max_iterations - 1);
  return cfg.eta0 + (cfg.eta1 - cfg.eta0) * fraction;
}

MeanResult ssg(const Sample& sample, const HeuristicConfig& cfg) {
  cfg.validate();
  std::vector<double> z = initial_series(sample, cfg.init).vector();

  MeanResult result{TimeSeries(z)};
  result.method = MeanMethod::Ssg;
  result.frechet_value = frechet(sample, result.mean);
  result.history.push_back(result.frechet_value);

  std::mt19937_64 rng(cfg.seed);
  std::vector<std::size_t> order(sample.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> gradient(z.size());

  for (std::size_t step = 0; step < cfg.max_iterations; ++step) {
    const std::size_t slot = step % sample.size();
    if (slot == 0) detail::shuffle(order, rng);
    const TimeSeries& x = sample[order[slot]];

    const TimeSeries current(z);
    const auto path = dtw(current, x).path;
    std::fill(gradient.begin(), gradient.end(), 0.0);
    for (const auto& [t, i] : path) gradient[t] += 2.0 * (z[t] - x[i]);

    const double eta = ssg_learning_rate(cfg, step);
    bool finite = true;
    for (std::size_t t = 0; t < z.size(); ++t) {
      z[t] -= eta * gradient[t];
      finite = finite && std::isfinite(z[t]);
    }
    if (!finite) break;  // diverged; keep the best iterate so far
    result.iterations = step + 1;

    TimeSeries candidate(z);
    const double value = frechet(sample, candidate);
    result.history.push_back(value);
    if (value < result.frechet_value) {
      result.frechet_value = value;
      result.mean = std::move(candidate);
    }
  }
  result.converged = false;
  return result;
}

}  // namespace dtwavg
