#include "dtwavg/evaluation.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "dtwavg/dtw.hpp"
#include "dtwavg/errors.hpp"
#include "dtwavg/sampling.hpp"
#include "rng.hpp"

namespace dtwavg {

Stats compute_stats(const std::vector<double>& values) {
  Stats s;
  if (values.empty()) return s;
  double sum = 0.0;
  for (double v : values) {
    sum += v;
    s.max = std::max(s.max, v);
  }
  s.avg = sum / static_cast<double>(values.size());
  double var = 0.0;
  for (double v : values) var += (v - s.avg) * (v - s.avg);
  s.std = std::sqrt(var / static_cast<double>(values.size()));
  return s;
}

void EvalSummary::summarize() {
  if (kind == EvalKind::Correctness) {
    trials = correctness.size();
    std::vector<double> eqs, mids;
    n_eq = n_mid = 0;
    for (const auto& r : correctness) {
      eqs.push_back(r.err_eq);
      mids.push_back(r.err_mid);
      if (std::abs(r.err_eq) <= kZeroErrorTolerance) ++n_eq;
      if (std::abs(r.err_mid) <= kZeroErrorTolerance) ++n_mid;
    }
    eq = compute_stats(eqs);
    mid = compute_stats(mids);
    return;
  }
  trials = driftout.size();
  drift_pct.assign(methods.size(), 0.0);
  if (trials == 0) return;
  for (std::size_t m = 0; m < methods.size(); ++m) {
    std::size_t drifted = 0;
    for (const auto& r : driftout) {
      if (!r.verdicts.at(m).coherent) ++drifted;
    }
    drift_pct[m] = 100.0 * static_cast<double>(drifted) / static_cast<double>(trials);
  }
}

std::vector<MeanMethod> canonical_methods(std::vector<MeanMethod> methods) {
  std::vector<MeanMethod> out;
  for (const auto m : {MeanMethod::Dba, MeanMethod::Ssg, MeanMethod::ExactDp}) {
    if (std::find(methods.begin(), methods.end(), m) != methods.end()) out.push_back(m);
  }
  for (const auto m : methods) {
    if (std::find(out.begin(), out.end(), m) == out.end()) {
      throw std::invalid_argument("method '" + std::string(to_string(m)) +
                                  "' cannot be used in the drift-out protocol");
    }
  }
  return out;
}

namespace {

// Runs fn(trial) for every trial on up to `jobs` threads. Each result lands in
// its own slot, so the output does not depend on scheduling. The exception of
// the lowest failing trial is rethrown.
template <typename Record, typename Fn>
std::vector<Record> run_trials(std::size_t trials, std::size_t jobs, Fn fn) {
  std::vector<Record> records(trials);
  std::vector<std::exception_ptr> errors(trials);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t = next++; t < trials; t = next++) {
      try {
        records[t] = fn(t);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    }
  };
  const std::size_t threads = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(trials, 1));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return records;
}

double choose(std::size_t n, std::size_t k) {
  double r = 1.0;
  for (std::size_t i = 0; i < k; ++i) {
    r *= static_cast<double>(n - i) / static_cast<double>(i + 1);
  }
  return r;
}

void check_trials(const Dataset& dataset, std::size_t tuple_size, std::size_t trials) {
  if (trials == 0) throw std::invalid_argument("the number of trials must be positive");
  if (dataset.size() < tuple_size ||
      static_cast<double>(trials) > choose(dataset.size(), tuple_size)) {
    throw DataError("dataset '" + dataset.name() + "' with " + std::to_string(dataset.size()) +
                    " series has fewer distinct " + std::to_string(tuple_size) + "-tuples than " +
                    std::to_string(trials) + " trials");
  }
}

}  // namespace

EvalSummary correctness_eval(const Dataset& dataset, const EvalOptions& options) {
  check_trials(dataset, 2, options.trials);
  check_exact_guard(2, dataset.series_length(), options.guard);

  auto one = [&](std::size_t t) {
    CorrectnessTrial r;
    r.trial = t;
    const auto idx = draw_tuple(dataset.size(), 2, trial_seed(options.seed, dataset.name(), t));
    r.indices = {idx[0], idx[1]};
    const TimeSeries& x = dataset[idx[0]];
    const TimeSeries& y = dataset[idx[1]];
    const auto mean = exact_mean_dp({x, y}, options.guard);
    r.mean_length = mean.mean.size();
    r.frechet_value = mean.frechet_value;
    r.d_xy = dtw_distance(x, y);
    r.d_x_mu = dtw_distance(x, mean.mean);
    r.d_mu_y = dtw_distance(mean.mean, y);
    r.err_eq = err_eq(r.d_x_mu, r.d_mu_y);
    r.err_mid = err_mid(r.d_xy, r.d_x_mu, r.d_mu_y);
    return r;
  };

  EvalSummary summary;
  summary.kind = EvalKind::Correctness;
  summary.dataset = dataset.name();
  summary.seed = options.seed;
  summary.correctness = run_trials<CorrectnessTrial>(options.trials, options.jobs, one);
  summary.summarize();
  return summary;
}

EvalSummary driftout_eval(const Dataset& dataset, const EvalOptions& options) {
  check_trials(dataset, 3, options.trials);
  options.heuristic.validate();
  const auto methods = canonical_methods(options.methods);
  check_exact_guard(2, dataset.series_length(), options.guard);
  if (std::find(methods.begin(), methods.end(), MeanMethod::ExactDp) != methods.end()) {
    check_exact_guard(3, dataset.series_length(), options.guard);
  }

  ReferenceOptions ref_options;
  ref_options.guard = options.guard;

  auto one = [&](std::size_t t) {
    DriftoutTrial r;
    r.trial = t;
    const std::uint64_t seed = trial_seed(options.seed, dataset.name(), t);
    const auto idx = draw_tuple(dataset.size(), 3, seed);
    r.indices = {idx[0], idx[1], idx[2]};
    const Cluster cluster{dataset[idx[0]], dataset[idx[1]], dataset[idx[2]]};
    const Sample sample(cluster.begin(), cluster.end());
    const auto refs = build_reference_set(cluster, Provenance::ExactMean, ref_options,
                                          dataset.name() + "#" + std::to_string(t));

    HeuristicConfig cfg = options.heuristic;
    cfg.seed = detail::splitmix64(seed ^ options.heuristic.seed);

    for (const auto method : methods) {
      MeanResult result = method == MeanMethod::Dba   ? dba(sample, cfg)
                          : method == MeanMethod::Ssg ? ssg(sample, cfg)
                                                      : exact_mean_dp(sample, options.guard);
      const auto report = centrality_test(result.mean, cluster, refs, options.tolerance);
      r.d_reference = report.d_reference;
      r.verdicts.push_back({method, result.frechet_value, result.iterations, report.d_candidate,
                            report.satisfied, report.coherent});
    }
    if (methods.empty()) {
      for (std::size_t k = 0; k < 3; ++k) {
        r.d_reference[k] = dtw_distance(refs.references[k], cluster[k]);
      }
    }
    return r;
  };

  EvalSummary summary;
  summary.kind = EvalKind::Driftout;
  summary.dataset = dataset.name();
  summary.seed = options.seed;
  summary.methods = methods;
  summary.driftout = run_trials<DriftoutTrial>(options.trials, options.jobs, one);
  summary.summarize();
  return summary;
}

EvalSummary pooled_summary(const std::vector<EvalSummary>& summaries, std::string name) {
  EvalSummary total;
  total.dataset = std::move(name);
  if (summaries.empty()) return total;
  total.kind = summaries.front().kind;
  total.seed = summaries.front().seed;
  total.methods = summaries.front().methods;
  for (const auto& s : summaries) {
    if (s.kind != total.kind || s.methods != total.methods) {
      throw std::invalid_argument("cannot pool summaries of different protocols or methods");
    }
    total.correctness.insert(total.correctness.end(), s.correctness.begin(), s.correctness.end());
    total.driftout.insert(total.driftout.end(), s.driftout.begin(), s.driftout.end());
  }
  total.summarize();
  return total;
}

}  // namespace dtwavg
