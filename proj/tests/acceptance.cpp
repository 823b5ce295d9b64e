// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.
//
//   dtwavg_acceptance [--ucr-root DIR] [--cli PATH]
//
// With --ucr-root the ItalyPowerDemand and pooled UCR bands are checked too.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "dtwavg/approx_mean.hpp"
#include "dtwavg/cli.hpp"
#include "dtwavg/dataset.hpp"
#include "dtwavg/dtw.hpp"
#include "dtwavg/errors.hpp"
#include "dtwavg/evaluation.hpp"
#include "dtwavg/exact_mean.hpp"
#include "dtwavg/geometry.hpp"
#include "random_series.hpp"

using namespace dtwavg;
using dtwavg::testing::random_integer_sample;
using dtwavg::testing::random_integer_series;
using dtwavg::testing::random_real_series;
using dtwavg::testing::random_size;
using dtwavg::testing::random_walk;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string ucr_root;

std::size_t total_length(const Sample& s) {
  std::size_t n = 0;
  for (const auto& x : s) n += x.size();
  return n;
}

// The oracle-sized instances shared by criteria 2 and 5.
std::vector<Sample> oracle_instances() {
  std::mt19937_64 rng(0xac2);
  std::vector<Sample> out;
  for (int i = 0; i < 200; ++i) out.push_back(random_integer_sample(rng, 2 + i % 2, 4, -3, 3));
  return out;
}

Outcome dtw_oracle() {
  const auto start = Clock::now();
  std::mt19937_64 rng(0xac1);
  std::size_t failures = 0;
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const auto x = random_integer_series(rng, random_size(rng, 1, 6), -3, 3);
    const auto y = random_integer_series(rng, random_size(rng, 1, 6), -3, 3);
    const auto r = dtw(x, y);
    const double gap = std::abs(r.distance - dtw_bruteforce(x, y));
    const double path_gap = std::abs(cost_of_path(x, y, r.path) - r.distance * r.distance);
    worst = std::max(worst, gap);
    if (gap > 1e-9 || path_gap > 1e-12) ++failures;
  }
  const double t = seconds_since(start);
  std::ostringstream d;
  d << "1000 pairs, failures " << failures << ", max |dtw - brute| " << worst << ", " << t << " s";
  return {failures == 0 && t < 10.0, d.str()};
}

Outcome exact_oracle() {
  const auto start = Clock::now();
  std::size_t failures = 0;
  double worst = 0.0;
  for (const auto& s : oracle_instances()) {
    const double gap = std::abs(exact_mean_dp(s).frechet_value -
                                exact_mean_bruteforce(s, total_length(s)).frechet_value);
    worst = std::max(worst, gap);
    if (gap > 1e-9) ++failures;
  }
  const double t = seconds_since(start);
  std::ostringstream d;
  d << "200 samples, failures " << failures << ", max gap " << worst << ", " << t << " s";
  return {failures == 0 && t < 300.0, d.str()};
}

Outcome exact_centrality() {
  std::mt19937_64 rng(0xac3);
  std::size_t failures = 0, chain_failures = 0;
  double slowest = 0.0;
  for (int i = 0; i < 100; ++i) {
    const Cluster c{random_walk(rng, random_size(rng, 2, 10)), random_walk(rng, random_size(rng, 2, 10)),
                    random_walk(rng, random_size(rng, 2, 10))};
    const auto start = Clock::now();
    const auto refs = build_reference_set(c);
    const auto mean = exact_mean_dp({c[0], c[1], c[2]}).mean;
    slowest = std::max(slowest, seconds_since(start));
    if (!centrality_test(mean, c, refs, 1e-9).coherent) ++failures;
    const auto chain = centrality_chain(mean, c, refs);
    for (std::size_t k = 0; k < 3; ++k) {
      if (chain.lhs[k] > chain.middle[k] + 1e-9) ++chain_failures;
      if (chain.middle[k] > chain.rhs[k] + 1e-9) ++chain_failures;
    }
  }
  std::ostringstream d;
  d << "100 triples, drift-outs " << failures << ", chain violations " << chain_failures
    << ", slowest triple " << slowest << " s";
  return {failures == 0 && chain_failures == 0 && slowest < 60.0, d.str()};
}

Outcome dba_monotone() {
  std::mt19937_64 rng(0xac4);
  std::size_t violations = 0, capped = 0;
  for (int i = 0; i < 200; ++i) {
    Sample s;
    const std::size_t k = random_size(rng, 2, 5);
    for (std::size_t j = 0; j < k; ++j) s.push_back(random_walk(rng, random_size(rng, 1, 30)));
    const auto r = dba(s);
    for (std::size_t t = 1; t < r.history.size(); ++t) {
      if (r.history[t] > r.history[t - 1] + 1e-12) ++violations;
    }
    if (!r.converged) ++capped;
  }
  std::ostringstream d;
  d << "200 samples, violations " << violations << ", runs hitting the cap " << capped;
  return {violations == 0, d.str()};
}

Outcome heuristic_ordering() {
  std::size_t failures = 0;
  for (const auto& s : oracle_instances()) {
    const double exact = exact_mean_dp(s).frechet_value;
    if (exact > dba(s).frechet_value + 1e-9) ++failures;
    if (exact > ssg(s).frechet_value + 1e-9) ++failures;
  }
  std::ostringstream d;
  d << "200 oracle-sized samples, ordering violations " << failures;
  return {failures == 0, d.str()};
}

Outcome correctness_reproduction() {
  const auto start = Clock::now();
  EvalOptions o;
  o.trials = 100;
  o.seed = 2024;
  const auto s = correctness_eval(random_walks("rw24", 300, 24, 24), o);
  std::size_t positive_mid = 0;
  for (const auto& r : s.correctness) {
    if (r.err_mid > 1e-9) ++positive_mid;
  }
  const double frac = static_cast<double>(positive_mid) / static_cast<double>(s.trials);
  bool pass = frac >= 0.95 && s.eq.avg > 0.0 && s.eq.avg <= 35.0;
  std::ostringstream d;
  d << "synthetic n=24: err_mid>0 in " << 100.0 * frac << "% of trials, err_eq avg " << s.eq.avg
    << " (std " << s.eq.std << ", max " << s.eq.max << "), err_mid avg " << s.mid.avg;

  if (!ucr_root.empty()) {
    try {
      const auto ipd = load_ucr(find_ucr_files(ucr_root, "ItalyPowerDemand"), "ItalyPowerDemand");
      const auto u = correctness_eval(ipd, o);
      const bool band = u.eq.avg >= 2.0 && u.eq.avg <= 12.0 && u.mid.avg >= 5.0 && u.mid.avg <= 20.0;
      pass = pass && band;
      d << "; ItalyPowerDemand err_eq avg " << u.eq.avg << ", err_mid avg " << u.mid.avg
        << (band ? " (in band)" : " (OUT OF BAND)");
    } catch (const DataError& e) {
      d << "; ItalyPowerDemand not found under " << ucr_root;
    }
  }
  d << ", " << seconds_since(start) << " s";
  return {pass, d.str()};
}

Outcome driftout_reproduction() {
  const auto start = Clock::now();
  EvalOptions o;
  o.trials = 100;
  o.seed = 77;
  std::vector<EvalSummary> heuristics;
  for (std::uint64_t i = 0; i < 3; ++i) {
    heuristics.push_back(driftout_eval(random_walks("rw24-" + std::to_string(i), 200, 24, 100 + i), o));
  }
  // Exact triple means only at a length where the k=3 program is quick.
  o.methods = {MeanMethod::Dba, MeanMethod::Ssg, MeanMethod::ExactDp};
  const auto with_exact = driftout_eval(random_walks("rw16", 200, 16, 16), o);

  std::vector<EvalSummary> all = heuristics;
  // Pool dba/ssg over all 400 triples.
  for (auto& s : all) s.summarize();
  EvalSummary trimmed = with_exact;
  trimmed.methods = {MeanMethod::Dba, MeanMethod::Ssg};
  for (auto& r : trimmed.driftout) r.verdicts.resize(2);
  trimmed.summarize();
  all.push_back(trimmed);
  const auto total = pooled_summary(all);

  const double dba_pct = total.drift_pct[0];
  const double ssg_pct = total.drift_pct[1];
  const double exact_pct = with_exact.drift_pct[2];
  bool pass = total.trials >= 300 && dba_pct > 0.0 && ssg_pct > 0.0 && exact_pct == 0.0;
  std::ostringstream d;
  d << total.trials << " triples: dba " << dba_pct << "%, ssg " << ssg_pct << "%; exact "
    << exact_pct << "% over " << with_exact.trials << " triples";

  if (!ucr_root.empty()) {
    std::vector<EvalSummary> ucr;
    EvalOptions uo;
    uo.trials = 100;
    uo.seed = 77;
    for (const auto& e : ucr_roster()) {
      try {
        const std::string name(e.name);
        ucr.push_back(driftout_eval(load_ucr(find_ucr_files(ucr_root, name), name), uo));
      } catch (const DataError&) {
      }
    }
    if (!ucr.empty()) {
      const auto u = pooled_summary(ucr);
      const bool band = u.drift_pct[0] >= 15.0 && u.drift_pct[0] <= 60.0 && u.drift_pct[1] >= 15.0 &&
                        u.drift_pct[1] <= 60.0;
      pass = pass && band;
      d << "; UCR pooled (" << ucr.size() << " datasets) dba " << u.drift_pct[0] << "%, ssg "
        << u.drift_pct[1] << "%" << (band ? " (in band)" : " (OUT OF BAND)");
    }
  }
  d << ", " << seconds_since(start) << " s";
  return {pass, d.str()};
}

Outcome metric_invariants() {
  const auto start = Clock::now();
  std::mt19937_64 rng(0xac8);
  std::uniform_real_distribution<double> factor(0.01, 100.0);
  std::size_t failures = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto x = random_real_series(rng, random_size(rng, 1, 12));
    const auto y = random_real_series(rng, random_size(rng, 1, 12));
    const auto mu = random_real_series(rng, random_size(rng, 1, 12));
    const double a = factor(rng);
    const double eq = err_eq(x, y, mu);
    const double mid = err_mid(x, y, mu);
    const bool ok = eq >= 0.0 && eq <= 100.0 && mid >= 0.0 &&
                    std::abs(eq - err_eq(x.scaled(a), y.scaled(a), mu.scaled(a))) <= 1e-9 &&
                    std::abs(mid - err_mid(x.scaled(a), y.scaled(a), mu.scaled(a))) <= 1e-9 &&
                    std::abs(eq - err_eq(y, x, mu)) <= 1e-9 && std::abs(mid - err_mid(y, x, mu)) <= 1e-9;
    if (!ok) ++failures;
  }
  const double t = seconds_since(start);
  std::ostringstream d;
  d << "1000 triples, failures " << failures << ", " << t << " s";
  return {failures == 0 && t < 10.0, d.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Outcome determinism() {
  const fs::path dir = fs::temp_directory_path() / "dtwavg_acceptance_determinism";
  fs::create_directories(dir);
  std::size_t mismatches = 0, runs = 0;
  std::ostringstream sink;
  for (const std::string cmd : {"eval-correctness", "eval-driftout"}) {
    for (const std::string fmt : {"csv", "json"}) {
      std::string reference;
      for (const std::string jobs : {"1", "1", "2", "5"}) {
        const auto out = dir / (cmd + "_" + jobs + "." + fmt);
        const int code = cli::run({cmd, "--synthetic", "60x16", "--synthetic", "40x12", "--trials", "8",
                                   "--seed", "123", "--jobs", jobs, "--output", out.string(), "--format",
                                   fmt},
                                  sink, sink);
        ++runs;
        const auto bytes = slurp(out);
        if (code != 0 || bytes.empty()) {
          ++mismatches;
        } else if (reference.empty()) {
          reference = bytes;
        } else if (bytes != reference) {
          ++mismatches;
        }
      }
    }
  }
  fs::remove_all(dir);
  std::ostringstream d;
  d << runs << " report runs (jobs 1,1,2,5), mismatches " << mismatches;
  return {mismatches == 0, d.str()};
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--ucr-root" && i + 1 < argc) ucr_root = argv[++i];
  }

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"AC1 dtw oracle equivalence", dtw_oracle},
      {"AC2 exact-mean oracle equivalence", exact_oracle},
      {"AC3 exact means never drift out", exact_centrality},
      {"AC4 DBA monotonicity", dba_monotone},
      {"AC5 heuristic suboptimality ordering", heuristic_ordering},
      {"AC6 correctness-criterion reproduction", correctness_reproduction},
      {"AC7 drift-out reproduction", driftout_reproduction},
      {"AC8 metric invariants", metric_invariants},
      {"AC9 report determinism", determinism},
  };

  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << name << " -- " << o.detail << std::endl;
    if (!o.pass) ++failed;
  }
  std::cout << (failed == 0 ? "all acceptance criteria passed" : std::to_string(failed) + " criteria failed")
            << std::endl;
  return failed == 0 ? 0 : 1;
}
