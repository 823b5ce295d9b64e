#include "dtwavg/report.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "dtwavg/errors.hpp"

namespace dtwavg {
namespace {

using nlohmann::ordered_json;

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

void csv_row(std::string& out, const EvalSummary& s) {
  out += s.dataset;
  if (s.kind == EvalKind::Correctness) {
    out += ',' + std::to_string(s.n_eq) + ',' + std::to_string(s.n_mid);
    for (const Stats* st : {&s.eq, &s.mid}) {
      out += ',' + fixed6(st->avg) + ',' + fixed6(st->std) + ',' + fixed6(st->max);
    }
  } else {
    for (double pct : s.drift_pct) out += ',' + fixed6(pct);
  }
  out += '\n';
}

const char* kind_name(EvalKind kind) {
  return kind == EvalKind::Correctness ? "correctness" : "driftout";
}

ordered_json stats_json(const Stats& s) {
  return {{"avg", s.avg}, {"std", s.std}, {"max", s.max}};
}

ordered_json aggregates_json(const EvalSummary& s) {
  ordered_json a;
  if (s.kind == EvalKind::Correctness) {
    a["n_eq"] = s.n_eq;
    a["n_mid"] = s.n_mid;
    a["err_eq"] = stats_json(s.eq);
    a["err_mid"] = stats_json(s.mid);
  } else {
    ordered_json pct = ordered_json::object();
    for (std::size_t m = 0; m < s.methods.size(); ++m) {
      pct[std::string(to_string(s.methods[m]))] = s.drift_pct[m];
    }
    a["drift_pct"] = pct;
  }
  return a;
}

ordered_json summary_json(const EvalSummary& s) {
  ordered_json j;
  j["dataset"] = s.dataset;
  j["seed"] = s.seed;
  j["trials"] = s.trials;
  if (s.kind == EvalKind::Driftout) {
    ordered_json methods = ordered_json::array();
    for (const auto m : s.methods) methods.push_back(std::string(to_string(m)));
    j["methods"] = methods;
  }
  j["aggregates"] = aggregates_json(s);
  ordered_json records = ordered_json::array();
  for (const auto& r : s.correctness) {
    records.push_back({{"trial", r.trial},
                       {"indices", r.indices},
                       {"d_xy", r.d_xy},
                       {"d_x_mu", r.d_x_mu},
                       {"d_mu_y", r.d_mu_y},
                       {"err_eq", r.err_eq},
                       {"err_mid", r.err_mid},
                       {"mean_length", r.mean_length},
                       {"frechet_value", r.frechet_value}});
  }
  for (const auto& r : s.driftout) {
    ordered_json verdicts = ordered_json::array();
    for (const auto& v : r.verdicts) {
      verdicts.push_back({{"method", std::string(to_string(v.method))},
                          {"frechet_value", v.frechet_value},
                          {"iterations", v.iterations},
                          {"d_candidate", v.d_candidate},
                          {"satisfied", v.satisfied},
                          {"coherent", v.coherent}});
    }
    records.push_back({{"trial", r.trial},
                       {"indices", r.indices},
                       {"d_reference", r.d_reference},
                       {"verdicts", verdicts}});
  }
  j["records"] = records;
  return j;
}

}  // namespace

std::string render_csv(const std::vector<EvalSummary>& summaries) {
  if (summaries.empty()) throw std::invalid_argument("nothing to report");
  const EvalSummary total = pooled_summary(summaries);
  std::string out = "dataset";
  if (total.kind == EvalKind::Correctness) {
    out += ",n_eq,n_mid,eq_avg,eq_std,eq_max,mid_avg,mid_std,mid_max";
  } else {
    for (const auto m : total.methods) out += ',' + std::string(to_string(m)) + "_pct";
  }
  out += '\n';
  for (const auto& s : summaries) csv_row(out, s);
  csv_row(out, total);
  return out;
}

std::string render_json(const std::vector<EvalSummary>& summaries) {
  if (summaries.empty()) throw std::invalid_argument("nothing to report");
  const EvalSummary total = pooled_summary(summaries);
  ordered_json j;
  j["protocol"] = kind_name(total.kind);
  ordered_json datasets = ordered_json::array();
  for (const auto& s : summaries) datasets.push_back(summary_json(s));
  j["datasets"] = datasets;
  j["total"] = aggregates_json(total);
  return j.dump(2) + "\n";
}

std::vector<EvalSummary> parse_json_report(const std::string& text) {
  std::vector<EvalSummary> out;
  try {
    const auto j = ordered_json::parse(text);
    const EvalKind kind =
        j.at("protocol").get<std::string>() == "correctness" ? EvalKind::Correctness
                                                             : EvalKind::Driftout;
    for (const auto& d : j.at("datasets")) {
      EvalSummary s;
      s.kind = kind;
      s.dataset = d.at("dataset").get<std::string>();
      s.seed = d.at("seed").get<std::uint64_t>();
      if (kind == EvalKind::Driftout) {
        for (const auto& m : d.at("methods")) {
          const auto method = parse_method(m.get<std::string>());
          if (!method) throw DataError("unknown method in report");
          s.methods.push_back(*method);
        }
      }
      for (const auto& r : d.at("records")) {
        if (kind == EvalKind::Correctness) {
          CorrectnessTrial t;
          t.trial = r.at("trial");
          t.indices = r.at("indices");
          t.d_xy = r.at("d_xy");
          t.d_x_mu = r.at("d_x_mu");
          t.d_mu_y = r.at("d_mu_y");
          t.err_eq = r.at("err_eq");
          t.err_mid = r.at("err_mid");
          t.mean_length = r.at("mean_length");
          t.frechet_value = r.at("frechet_value");
          s.correctness.push_back(t);
        } else {
          DriftoutTrial t;
          t.trial = r.at("trial");
          t.indices = r.at("indices");
          t.d_reference = r.at("d_reference");
          for (const auto& v : r.at("verdicts")) {
            MethodVerdict mv;
            mv.method = parse_method(v.at("method").get<std::string>()).value_or(MeanMethod::Dba);
            mv.frechet_value = v.at("frechet_value");
            mv.iterations = v.at("iterations");
            mv.d_candidate = v.at("d_candidate");
            mv.satisfied = v.at("satisfied");
            mv.coherent = v.at("coherent");
            t.verdicts.push_back(mv);
          }
          s.driftout.push_back(std::move(t));
        }
      }
      s.summarize();
      out.push_back(std::move(s));
    }
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("malformed report: ") + e.what());
  }
  return out;
}

void write_report(const std::vector<EvalSummary>& summaries, ReportFormat format,
                  const std::filesystem::path& path) {
  const std::string text =
      format == ReportFormat::Csv ? render_csv(summaries) : render_json(summaries);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  out << text;
  out.flush();
  if (!out) throw std::runtime_error("write to '" + path.string() + "' failed");
}

}  // namespace dtwavg
