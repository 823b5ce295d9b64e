#include <gtest/gtest.h>

#include <array>

#include <cmath>

#include "dtwavg/dtw.hpp"
#include "dtwavg/errors.hpp"
#include "dtwavg/geometry.hpp"
#include "random_series.hpp"

using namespace dtwavg;
using dtwavg::testing::random_real_series;
using dtwavg::testing::random_size;
using dtwavg::testing::random_walk;

TEST(ErrEq, Examples) {
  const TimeSeries x{1, 2};
  EXPECT_EQ(err_eq(x, x, x), 0.0);
  EXPECT_NEAR(err_eq(TimeSeries{0}, TimeSeries{2}, TimeSeries{0.5}), 100.0 / 1.5, 1e-12);
}

TEST(ErrMid, Examples) {
  EXPECT_EQ(err_mid(TimeSeries{0}, TimeSeries{2}, TimeSeries{1}), 0.0);
  EXPECT_DOUBLE_EQ(err_mid(TimeSeries{0}, TimeSeries{2}, TimeSeries{3}), 100.0);
  // Degenerate denominators.
  const TimeSeries x{1, 1};
  EXPECT_EQ(err_mid(x, TimeSeries{1}, TimeSeries{5}), 0.0);
  EXPECT_EQ(err_eq(0.0, 0.0), 0.0);
}

TEST(ErrMid, CanExceedHundred) {
  // |1 - 10 - 9| / 1
  EXPECT_GT(err_mid(TimeSeries{0}, TimeSeries{1}, TimeSeries{10}), 100.0);
}

TEST(Metrics, MidpointImpliesZero) {
  // d(x,mu) = d(mu,y) = 1 and d(x,y) = 2.
  const TimeSeries x{0, 0}, y{2, 2}, mu{1, 1};
  EXPECT_NEAR(err_eq(x, y, mu), 0.0, 1e-12);
  EXPECT_NEAR(err_mid(x, y, mu), 0.0, 1e-12);
}

TEST(Metrics, RandomizedInvariants) {
  std::mt19937_64 rng(404);
  std::uniform_real_distribution<double> factor(0.01, 50.0);
  for (int trial = 0; trial < 200; ++trial) {
    const auto x = random_real_series(rng, random_size(rng, 1, 10));
    const auto y = random_real_series(rng, random_size(rng, 1, 10));
    const auto mu = random_real_series(rng, random_size(rng, 1, 10));
    const double eq = err_eq(x, y, mu);
    const double mid = err_mid(x, y, mu);
    EXPECT_GE(eq, 0.0);
    EXPECT_LE(eq, 100.0);
    EXPECT_GE(mid, 0.0);
    EXPECT_NEAR(eq, err_eq(y, x, mu), 1e-9);
    EXPECT_NEAR(mid, err_mid(y, x, mu), 1e-9);
    const double a = factor(rng);
    EXPECT_NEAR(eq, err_eq(x.scaled(a), y.scaled(a), mu.scaled(a)), 1e-9);
    EXPECT_NEAR(mid, err_mid(x.scaled(a), y.scaled(a), mu.scaled(a)), 1e-9);
  }
}

TEST(ReferenceSet, PairwiseMidpointsOfScalars) {
  const Cluster c{TimeSeries{0}, TimeSeries{2}, TimeSeries{4}};
  const auto r = build_reference_set(c);
  EXPECT_EQ(r.references[0], TimeSeries{3});
  EXPECT_EQ(r.references[1], TimeSeries{2});
  EXPECT_EQ(r.references[2], TimeSeries{1});
  for (auto p : r.provenance) EXPECT_EQ(p, Provenance::ExactMean);
}

TEST(ReferenceSet, IdenticalMembers) {
  const TimeSeries x{1, 4, 2};
  const Cluster c{x, x, x};
  const auto r = build_reference_set(c);
  for (const auto& ref : r.references) {
    EXPECT_NEAR(frechet({x, x}, ref), 0.0, 1e-12);
    EXPECT_NEAR(dtw_distance(ref, x), 0.0, 1e-12);
  }
}

TEST(ReferenceSet, ProvenanceAndGuard) {
  std::mt19937_64 rng(2);
  const Cluster c{random_walk(rng, 8), random_walk(rng, 8), random_walk(rng, 8)};
  const auto r = build_reference_set(c, Provenance::Dba, {}, "c0");
  for (auto p : r.provenance) EXPECT_EQ(p, Provenance::Dba);
  EXPECT_EQ(r.source_cluster_id, "c0");
  EXPECT_EQ(build_reference_set(c, Provenance::Ssg).provenance[1], Provenance::Ssg);
  EXPECT_THROW(build_reference_set(c, Provenance::External), std::invalid_argument);

  ReferenceOptions tight;
  tight.guard.max_length_pair = 4;
  EXPECT_THROW(build_reference_set(c, Provenance::ExactMean, tight), GuardError);
}

TEST(Centrality, Examples) {
  const TimeSeries x{1, 4, 2};
  const Cluster same{x, x, x};
  const auto same_report = centrality_test(x, same, build_reference_set(same));
  EXPECT_TRUE(same_report.coherent);
  for (double d : same_report.d_candidate) EXPECT_EQ(d, 0.0);

  const Cluster c{TimeSeries{0}, TimeSeries{1}, TimeSeries{2}};
  const auto refs = build_reference_set(c);
  const auto far = centrality_test(TimeSeries{100}, c, refs);
  EXPECT_FALSE(far.coherent);
  EXPECT_TRUE(far.drifted_out());
  // mu_0 = 1.5, mu_1 = 1, mu_2 = 0.5
  const std::array<double, 3> expected{1.5, 0.0, 1.5};
  for (std::size_t k = 0; k < 3; ++k) {
    EXPECT_FALSE(far.satisfied[k]);
    EXPECT_NEAR(far.d_reference[k], expected[k], 1e-12);
  }
  EXPECT_TRUE(centrality_test(exact_mean_dp({c[0], c[1], c[2]}).mean, c, refs).coherent);
}

TEST(Centrality, ReportInvariants) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    const Cluster c{random_walk(rng, 6), random_walk(rng, 6), random_walk(rng, 6)};
    const auto refs = build_reference_set(c);
    const auto z = random_walk(rng, 6);
    const auto report = centrality_test(z, c, refs, 0.0);
    bool all = true;
    for (std::size_t k = 0; k < 3; ++k) {
      EXPECT_EQ(report.satisfied[k], report.d_candidate[k] <= report.d_reference[k]);
      all = all && report.satisfied[k];
    }
    EXPECT_EQ(report.coherent, all);
    EXPECT_EQ(report.tolerance_used, 0.0);

    // Verdicts survive a common positive rescaling.
    const double a = 3.5;
    ReferenceSet scaled_refs = refs;
    for (auto& r : scaled_refs.references) r = r.scaled(a);
    const Cluster scaled_c{c[0].scaled(a), c[1].scaled(a), c[2].scaled(a)};
    const auto scaled_report = centrality_test(z.scaled(a), scaled_c, scaled_refs, 0.0);
    EXPECT_EQ(scaled_report.satisfied, report.satisfied);
  }
}

TEST(Centrality, ExactMeansNeverDriftOut) {
  std::mt19937_64 rng(1001);
  for (int trial = 0; trial < 30; ++trial) {
    const Cluster c{random_walk(rng, random_size(rng, 1, 8)), random_walk(rng, random_size(rng, 1, 8)),
                    random_walk(rng, random_size(rng, 1, 8))};
    const auto refs = build_reference_set(c);
    const auto mean = exact_mean_dp({c[0], c[1], c[2]}).mean;
    EXPECT_TRUE(centrality_test(mean, c, refs).coherent);

    const auto chain = centrality_chain(mean, c, refs);
    for (std::size_t k = 0; k < 3; ++k) {
      EXPECT_NEAR(chain.lhs[k], std::pow(dtw_distance(c[k], mean), 2), 1e-9);
      EXPECT_NEAR(chain.rhs[k], std::pow(dtw_distance(c[k], refs.references[k]), 2), 1e-9);
      EXPECT_LE(chain.lhs[k], chain.middle[k] + 1e-9);
      EXPECT_LE(chain.middle[k], chain.rhs[k] + 1e-9);
    }
  }
}
