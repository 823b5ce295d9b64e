#pragma once

#include <array>
#include <string>
#include <string_view>

#include "dtwavg/approx_mean.hpp"
#include "dtwavg/exact_mean.hpp"
#include "dtwavg/time_series.hpp"

namespace dtwavg {

/// Percentage violation of equidistance:
/// 100 |d(x,mu) - d(mu,y)| / max(d(x,mu), d(mu,y)), or 0 if both are 0.
/// Always in [0, 100].
double err_eq(const TimeSeries& x, const TimeSeries& y, const TimeSeries& mu);

/// Percentage violation of the midpoint identity:
/// 100 |d(x,y) - d(x,mu) - d(mu,y)| / d(x,y), or 0 if d(x,y) = 0.
/// Not bounded by 100 since dtw has no triangle inequality.
double err_mid(const TimeSeries& x, const TimeSeries& y, const TimeSeries& mu);

/// Same metrics from precomputed distances.
double err_eq(double d_x_mu, double d_mu_y);
double err_mid(double d_x_y, double d_x_mu, double d_mu_y);

/// A cluster of exactly three series.
using Cluster = std::array<TimeSeries, 3>;

enum class Provenance { ExactMean, Dba, Ssg, External };

std::string_view to_string(Provenance provenance);

/// Three references; references[k] stands for the pair obtained by removing
/// member k from the cluster.
struct ReferenceSet {
  std::array<TimeSeries, 3> references;
  std::array<Provenance, 3> provenance;
  std::string source_cluster_id;
};

struct ReferenceOptions {
  ExactGuard guard{};
  HeuristicConfig heuristic{};
};

/// Pairwise means of the cluster with member k left out, k = 0, 1, 2.
/// Throws GuardError when an exact pair mean is above the guard.
ReferenceSet build_reference_set(const Cluster& cluster,
                                 Provenance method = Provenance::ExactMean,
                                 const ReferenceOptions& options = {},
                                 std::string cluster_id = {});

/// Default additive slack for the centrality conditions.
inline constexpr double kCentralityTolerance = 1e-9;

struct CentralityReport {
  std::array<double, 3> d_candidate{};  ///< d(z, x_k)
  std::array<double, 3> d_reference{};  ///< d(mu_k, x_k)
  std::array<bool, 3> satisfied{};
  bool coherent = false;
  double tolerance_used = 0.0;

  bool drifted_out() const noexcept { return !coherent; }
};

/// Evaluates d(z, x_k) <= d(mu_k, x_k) + tol for k = 0, 1, 2. The candidate is
/// coherent iff all three conditions hold.
CentralityReport centrality_test(const TimeSeries& z, const Cluster& cluster,
                                 const ReferenceSet& references,
                                 double tol = kCentralityTolerance);

/// Terms of the chain
///   d(x_k, mu)^2 = F(mu) - F_k(mu) <= F(mu) - F_k(mu_k) <= F(mu_k) - F_k(mu_k) = d(x_k, mu_k)^2
/// where F is the cluster Fréchet function, F_k the one of the pair without
/// x_k, mu a cluster mean and mu_k the reference for x_k. Both inequalities
/// hold whenever mu and every mu_k are exact means.
struct CentralityChain {
  std::array<double, 3> lhs{};     ///< F(mu) - F_k(mu)
  std::array<double, 3> middle{};  ///< F(mu) - F_k(mu_k)
  std::array<double, 3> rhs{};     ///< F(mu_k) - F_k(mu_k)
};

CentralityChain centrality_chain(const TimeSeries& mean, const Cluster& cluster,
                                 const ReferenceSet& references);

}  // namespace dtwavg
