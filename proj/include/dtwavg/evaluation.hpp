#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "dtwavg/approx_mean.hpp"
#include "dtwavg/dataset.hpp"
#include "dtwavg/exact_mean.hpp"
#include "dtwavg/geometry.hpp"

namespace dtwavg {

/// Shared knobs of both evaluation protocols.
struct EvalOptions {
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  std::size_t jobs = 1;
  ExactGuard guard{};
  HeuristicConfig heuristic{};
  double tolerance = kCentralityTolerance;
  /// Methods whose cluster means are tested in driftout_eval; any subset of
  /// {Dba, Ssg, ExactDp}.
  std::vector<MeanMethod> methods{MeanMethod::Dba, MeanMethod::Ssg};
};

struct Stats {
  double avg = 0.0;
  double std = 0.0;  ///< population form
  double max = 0.0;
};

/// Population statistics; all zero for an empty input.
Stats compute_stats(const std::vector<double>& values);

/// Absolute threshold below which an error percentage counts as zero.
inline constexpr double kZeroErrorTolerance = 1e-9;

struct CorrectnessTrial {
  std::size_t trial = 0;
  std::array<std::size_t, 2> indices{};
  double d_xy = 0.0;
  double d_x_mu = 0.0;
  double d_mu_y = 0.0;
  double err_eq = 0.0;
  double err_mid = 0.0;
  std::size_t mean_length = 0;
  double frechet_value = 0.0;
};

struct MethodVerdict {
  MeanMethod method = MeanMethod::Dba;
  double frechet_value = 0.0;
  std::size_t iterations = 0;
  std::array<double, 3> d_candidate{};
  std::array<bool, 3> satisfied{};
  bool coherent = false;
};

struct DriftoutTrial {
  std::size_t trial = 0;
  std::array<std::size_t, 3> indices{};
  std::array<double, 3> d_reference{};
  std::vector<MethodVerdict> verdicts;  ///< in EvalSummary::methods order
};

enum class EvalKind { Correctness, Driftout };

/// Per-dataset outcome of one protocol. Aggregates are derived from the
/// records by summarize().
struct EvalSummary {
  EvalKind kind = EvalKind::Correctness;
  std::string dataset;
  std::size_t trials = 0;
  std::uint64_t seed = 0;

  // Correctness protocol.
  std::vector<CorrectnessTrial> correctness;
  Stats eq{};
  Stats mid{};
  std::size_t n_eq = 0;
  std::size_t n_mid = 0;

  // Drift-out protocol.
  std::vector<MeanMethod> methods;
  std::vector<DriftoutTrial> driftout;
  std::vector<double> drift_pct;  ///< per method, in [0, 100]

  /// Recomputes every aggregate from the per-trial records.
  void summarize();
};

/// Exact means of random pairs and their equidistance / midpoint errors.
/// Throws DataError when options.trials exceeds the number of distinct pairs
/// and GuardError when the series are too long for the exact pair mean.
EvalSummary correctness_eval(const Dataset& dataset, const EvalOptions& options);

/// Random triples tested against exact mean-based reference sets. Each
/// requested method approximates the triple mean; a result that fails a
/// centrality condition counts as drifted out.
EvalSummary driftout_eval(const Dataset& dataset, const EvalOptions& options);

/// Pools the records of several summaries into a "total" summary.
EvalSummary pooled_summary(const std::vector<EvalSummary>& summaries,
                           std::string name = "total");

/// Canonical order (dba, ssg, exact) without duplicates.
std::vector<MeanMethod> canonical_methods(std::vector<MeanMethod> methods);

}  // namespace dtwavg
