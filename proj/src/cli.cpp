#include "dtwavg/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "dtwavg/approx_mean.hpp"
#include "dtwavg/dataset.hpp"
#include "dtwavg/dtw.hpp"
#include "dtwavg/errors.hpp"
#include "dtwavg/evaluation.hpp"
#include "dtwavg/exact_mean.hpp"
#include "dtwavg/report.hpp"

namespace dtwavg::cli {
namespace {

namespace fs = std::filesystem;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

struct RunConfig {
  std::vector<std::string> files;
  std::vector<std::string> datasets;   // NAME=TRAIN[,TEST]
  std::string ucr_root;
  std::vector<std::string> names;
  std::vector<std::string> synthetic;  // COUNTxLEN
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  std::size_t max_iter = 200;
  double eta0 = 0.2;
  double eta1 = 0.02;
  std::optional<double> tol;
  std::vector<std::string> methods{"dba", "ssg"};
  std::string output;
  std::string format;
  std::size_t jobs = 1;
  bool normalize = false;
  std::optional<std::size_t> max_n;
  bool allow_slow = false;
  std::string init = "medoid";
  bool show_path = false;
  // gen-synthetic
  std::size_t count = 100;
  std::size_t length = 24;
  std::string name = "synthetic";
};

ExactGuard make_guard(const RunConfig& rc) {
  ExactGuard g;
  if (rc.max_n) g.max_length_pair = g.max_length_triple = *rc.max_n;
  g.allow_slow = rc.allow_slow;
  return g;
}

HeuristicConfig make_heuristic(const RunConfig& rc, const Sample* sample) {
  HeuristicConfig cfg;
  cfg.max_iterations = rc.max_iter;
  cfg.eta0 = rc.eta0;
  cfg.eta1 = rc.eta1;
  cfg.seed = rc.seed;
  if (rc.init != "medoid") {
    std::size_t index = 0;
    std::istringstream in(rc.init);
    if (!(in >> index) || !in.eof()) {
      throw UsageError("--init expects 'medoid' or a member index, got '" + rc.init + "'");
    }
    if (sample && index >= sample->size()) {
      throw UsageError("--init index " + rc.init + " out of range");
    }
    cfg.init = MemberInit{index};
  }
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return cfg;
}

Sample read_sample(const RunConfig& rc, std::size_t min_size) {
  if (rc.files.size() < min_size) {
    throw UsageError("expected at least " + std::to_string(min_size) + " series files");
  }
  Sample sample;
  for (const auto& f : rc.files) sample.push_back(read_series(f));
  return sample;
}

void print_series(std::ostream& out, const TimeSeries& z) {
  for (std::size_t i = 0; i < z.size(); ++i) out << (i ? " " : "") << fixed6(z[i]);
  out << '\n';
}

void write_series(const TimeSeries& z, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
  char buf[32];
  for (double v : z) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    f << buf << '\n';
  }
  if (!f) throw std::runtime_error("write to '" + path + "' failed");
}

void report_mean(std::ostream& out, const MeanResult& r, const std::string& output) {
  out << "method " << to_string(r.method) << '\n';
  out << "frechet " << fixed6(r.frechet_value) << '\n';
  out << "length " << r.mean.size() << '\n';
  out << "iterations " << r.iterations << '\n';
  out << "converged " << (r.converged ? "true" : "false") << '\n';
  out << "mean ";
  print_series(out, r.mean);
  if (!output.empty()) write_series(r.mean, output);
}

std::vector<Dataset> collect_datasets(const RunConfig& rc) {
  std::vector<Dataset> out;
  for (const auto& spec : rc.datasets) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == spec.size()) {
      throw UsageError("--dataset expects NAME=TRAIN[,TEST], got '" + spec + "'");
    }
    std::vector<fs::path> paths;
    std::string rest = spec.substr(eq + 1);
    std::size_t start = 0;
    while (start <= rest.size()) {
      const auto comma = rest.find(',', start);
      paths.emplace_back(rest.substr(start, comma == std::string::npos ? comma : comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    out.push_back(load_ucr(paths, spec.substr(0, eq)));
  }
  if (!rc.ucr_root.empty()) {
    std::vector<std::string> names = rc.names;
    if (names.empty()) {
      for (const auto& e : ucr_roster()) names.emplace_back(e.name);
    }
    for (const auto& name : names) out.push_back(load_ucr(find_ucr_files(rc.ucr_root, name), name));
  }
  for (std::size_t i = 0; i < rc.synthetic.size(); ++i) {
    const auto& spec = rc.synthetic[i];
    std::size_t count = 0, length = 0;
    char x = 0;
    std::istringstream in(spec);
    if (!(in >> count >> x >> length) || x != 'x' || !in.eof() || count == 0 || length == 0) {
      throw UsageError("--synthetic expects COUNTxLENGTH, got '" + spec + "'");
    }
    out.push_back(random_walks("synthetic-" + std::to_string(i) + "-" + spec, count, length,
                               rc.seed + i));
  }
  if (out.empty()) throw UsageError("no dataset given (use --dataset, --ucr-root or --synthetic)");
  if (rc.normalize) {
    for (auto& d : out) d = z_normalized(d);
  }
  return out;
}

void emit_report(std::ostream& out, const std::vector<EvalSummary>& summaries,
                 const RunConfig& rc) {
  out << render_csv(summaries);
  if (rc.output.empty()) return;
  ReportFormat format = ReportFormat::Csv;
  std::string name = rc.format;
  if (name.empty()) name = fs::path(rc.output).extension() == ".json" ? "json" : "csv";
  if (name == "json") format = ReportFormat::Json;
  write_report(summaries, format, rc.output);
}

EvalOptions eval_options(const RunConfig& rc) {
  if (rc.trials == 0) throw UsageError("--trials must be positive");
  if (rc.jobs == 0) throw UsageError("--jobs must be positive");
  EvalOptions o;
  o.trials = rc.trials;
  o.seed = rc.seed;
  o.jobs = rc.jobs;
  o.guard = make_guard(rc);
  o.heuristic = make_heuristic(rc, nullptr);
  if (rc.tol) {
    if (*rc.tol < 0.0) throw UsageError("--tol must be nonnegative");
    o.tolerance = *rc.tol;
  }
  o.methods.clear();
  for (const auto& m : rc.methods) {
    const auto method = parse_method(m);
    if (!method || *method == MeanMethod::ExactBruteforce) {
      throw UsageError("unknown method '" + m + "' (expected dba, ssg or exact)");
    }
    o.methods.push_back(*method);
  }
  return o;
}

void add_eval_flags(CLI::App* cmd, RunConfig& rc) {
  cmd->add_option("--dataset", rc.datasets, "NAME=TRAIN[,TEST] UCR files (repeatable)");
  cmd->add_option("--ucr-root", rc.ucr_root, "Directory holding NAME/NAME_TRAIN.tsv files");
  cmd->add_option("--names", rc.names, "Dataset names under --ucr-root (default: full roster)")
      ->delimiter(',');
  cmd->add_option("--synthetic", rc.synthetic, "COUNTxLENGTH seeded random walks (repeatable)");
  cmd->add_option("--trials", rc.trials, "Trials per dataset");
  cmd->add_option("--seed", rc.seed, "Master seed");
  cmd->add_option("--jobs", rc.jobs, "Worker threads");
  cmd->add_flag("--normalize", rc.normalize, "z-normalise every series after loading");
  cmd->add_option("--max-n", rc.max_n, "Longest series accepted by the exact mean");
  cmd->add_flag("--allow-slow", rc.allow_slow, "Disable the exact-mean size guard");
  cmd->add_option("--output", rc.output, "Report path");
  cmd->add_option("--format", rc.format, "Report format")->check(CLI::IsMember({"csv", "json"}));
}

void add_heuristic_flags(CLI::App* cmd, RunConfig& rc) {
  cmd->add_option("--max-iter", rc.max_iter, "Iteration cap");
  cmd->add_option("--eta0", rc.eta0, "Initial SSG learning rate");
  cmd->add_option("--eta1", rc.eta1, "Final SSG learning rate");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Time series averaging under dynamic time warping", "dtwavg"};
  app.require_subcommand(1);
  RunConfig rc;

  auto* dist = app.add_subcommand("dist", "dtw-distance of two series");
  dist->add_option("files", rc.files, "Two series files")->required()->expected(2);
  dist->add_flag("--path", rc.show_path, "Also print an optimal warping path (1-based)");

  auto* mean_exact = app.add_subcommand("mean-exact", "Exact mean of 2 or 3 series");
  mean_exact->add_option("files", rc.files, "Series files")->required();
  mean_exact->add_option("--max-n", rc.max_n, "Longest series accepted");
  mean_exact->add_flag("--allow-slow", rc.allow_slow, "Disable the size guard");
  mean_exact->add_option("--output", rc.output, "Write the mean, one value per line");

  auto* mean_dba = app.add_subcommand("mean-dba", "DBA approximation");
  auto* mean_ssg = app.add_subcommand("mean-ssg", "SSG approximation");
  for (auto* cmd : {mean_dba, mean_ssg}) {
    cmd->add_option("files", rc.files, "Series files")->required();
    add_heuristic_flags(cmd, rc);
    cmd->add_option("--seed", rc.seed, "Random seed");
    cmd->add_option("--init", rc.init, "'medoid' or a member index");
    cmd->add_option("--output", rc.output, "Write the mean, one value per line");
  }
  mean_dba->add_option("--tol", rc.tol, "Stop when F decreases by no more than this");

  auto* eval_corr = app.add_subcommand("eval-correctness", "Equidistance and midpoint errors");
  add_eval_flags(eval_corr, rc);

  auto* eval_drift = app.add_subcommand("eval-driftout", "Drift-out rates of approximations");
  add_eval_flags(eval_drift, rc);
  add_heuristic_flags(eval_drift, rc);
  eval_drift->add_option("--methods", rc.methods, "Subset of dba,ssg,exact")->delimiter(',');
  eval_drift->add_option("--tol", rc.tol, "Centrality tolerance");

  auto* gen = app.add_subcommand("gen-synthetic", "Write seeded random walks in UCR format");
  gen->add_option("--count", rc.count, "Number of series");
  gen->add_option("--length", rc.length, "Series length");
  gen->add_option("--seed", rc.seed, "Random seed");
  gen->add_option("--name", rc.name, "Dataset name");
  gen->add_option("--output", rc.output, "Output file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (dist->parsed()) {
      const auto x = read_series(rc.files.at(0));
      const auto y = read_series(rc.files.at(1));
      const auto r = dtw(x, y);
      out << "distance " << fixed6(r.distance) << '\n';
      if (rc.show_path) {
        out << "path";
        for (const auto& [i, j] : r.path) out << " (" << i + 1 << ',' << j + 1 << ')';
        out << '\n';
      }
    } else if (mean_exact->parsed()) {
      const auto sample = read_sample(rc, 2);
      if (sample.size() > 3) throw UsageError("mean-exact takes 2 or 3 series");
      report_mean(out, exact_mean_dp(sample, make_guard(rc)), rc.output);
    } else if (mean_dba->parsed() || mean_ssg->parsed()) {
      const auto sample = read_sample(rc, 1);
      auto cfg = make_heuristic(rc, &sample);
      if (rc.tol) cfg.tolerance = *rc.tol;
      const auto r = mean_dba->parsed() ? dba(sample, cfg) : ssg(sample, cfg);
      report_mean(out, r, rc.output);
    } else if (eval_corr->parsed() || eval_drift->parsed()) {
      const auto options = eval_options(rc);
      const auto datasets = collect_datasets(rc);
      std::vector<EvalSummary> summaries;
      for (const auto& d : datasets) {
        summaries.push_back(eval_corr->parsed() ? correctness_eval(d, options)
                                                : driftout_eval(d, options));
      }
      emit_report(out, summaries, rc);
    } else if (gen->parsed()) {
      if (rc.count == 0 || rc.length == 0) throw UsageError("--count and --length must be positive");
      write_ucr(random_walks(rc.name, rc.count, rc.length, rc.seed), rc.output);
      out << "wrote " << rc.count << " series of length " << rc.length << " to " << rc.output
          << '\n';
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const GuardError& e) {
    err << "refused: " << e.what() << '\n';
    return kExitGuard;
  } catch (const DataError& e) {
    err << "data error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitOk;
}

}  // namespace dtwavg::cli
