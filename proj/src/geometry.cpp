#include "dtwavg/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dtwavg/dtw.hpp"

namespace dtwavg {

double err_eq(double d_x_mu, double d_mu_y) {
  const double denom = std::max(d_x_mu, d_mu_y);
  if (denom == 0.0) return 0.0;
  return 100.0 * std::abs(d_x_mu - d_mu_y) / denom;
}

double err_mid(double d_x_y, double d_x_mu, double d_mu_y) {
  if (d_x_y == 0.0) return 0.0;
  return 100.0 * std::abs(d_x_y - d_x_mu - d_mu_y) / d_x_y;
}

double err_eq(const TimeSeries& x, const TimeSeries& y, const TimeSeries& mu) {
  return err_eq(dtw_distance(x, mu), dtw_distance(mu, y));
}

double err_mid(const TimeSeries& x, const TimeSeries& y, const TimeSeries& mu) {
  return err_mid(dtw_distance(x, y), dtw_distance(x, mu), dtw_distance(mu, y));
}

std::string_view to_string(Provenance provenance) {
  switch (provenance) {
    case Provenance::ExactMean: return "exact-mean";
    case Provenance::Dba: return "dba";
    case Provenance::Ssg: return "ssg";
    case Provenance::External: return "external";
  }
  return "unknown";
}

namespace {

Sample pair_without(const Cluster& cluster, std::size_t k) {
  Sample pair;
  for (std::size_t i = 0; i < 3; ++i) {
    if (i != k) pair.push_back(cluster[i]);
  }
  return pair;
}

}  // namespace

ReferenceSet build_reference_set(const Cluster& cluster, Provenance method,
                                 const ReferenceOptions& options, std::string cluster_id) {
  auto compute = [&](std::size_t k) -> TimeSeries {
    const Sample pair = pair_without(cluster, k);
    switch (method) {
      case Provenance::ExactMean: return exact_mean_dp(pair, options.guard).mean;
      case Provenance::Dba: return dba(pair, options.heuristic).mean;
      case Provenance::Ssg: return ssg(pair, options.heuristic).mean;
      case Provenance::External: break;
    }
    throw std::invalid_argument("external references cannot be computed");
  };
  return ReferenceSet{{compute(0), compute(1), compute(2)},
                      {method, method, method},
                      std::move(cluster_id)};
}

CentralityReport centrality_test(const TimeSeries& z, const Cluster& cluster,
                                 const ReferenceSet& references, double tol) {
  if (!(tol >= 0.0)) throw std::invalid_argument("centrality tolerance must be nonnegative");
  CentralityReport report;
  report.tolerance_used = tol;
  report.coherent = true;
  for (std::size_t k = 0; k < 3; ++k) {
    report.d_candidate[k] = dtw_distance(z, cluster[k]);
    report.d_reference[k] = dtw_distance(references.references[k], cluster[k]);
    report.satisfied[k] = report.d_candidate[k] <= report.d_reference[k] + tol;
    report.coherent = report.coherent && report.satisfied[k];
  }
  return report;
}

CentralityChain centrality_chain(const TimeSeries& mean, const Cluster& cluster,
                                 const ReferenceSet& references) {
  const Sample all(cluster.begin(), cluster.end());
  const double f_mean = frechet(all, mean);
  CentralityChain chain;
  for (std::size_t k = 0; k < 3; ++k) {
    const Sample pair = pair_without(cluster, k);
    const TimeSeries& ref = references.references[k];
    const double f_ref = frechet(pair, ref);
    chain.lhs[k] = f_mean - frechet(pair, mean);
    chain.middle[k] = f_mean - f_ref;
    chain.rhs[k] = frechet(all, ref) - f_ref;
  }
  return chain;
}

}  // namespace dtwavg
