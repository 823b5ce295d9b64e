#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "dtwavg/evaluation.hpp"

namespace dtwavg {

enum class ReportFormat { Csv, Json };

/// CSV: one row per dataset and a final "total" row. Correctness columns are
///   dataset,n_eq,n_mid,eq_avg,eq_std,eq_max,mid_avg,mid_std,mid_max
/// and drift-out columns are dataset,<method>_pct for each method.
/// Numbers use fixed 6-decimal notation.
std::string render_csv(const std::vector<EvalSummary>& summaries);

/// JSON with the configuration, every per-trial record and the aggregates.
/// Doubles are written in shortest round-trip form.
std::string render_json(const std::vector<EvalSummary>& summaries);

/// Re-reads summaries written by render_json() and recomputes aggregates from
/// the records.
std::vector<EvalSummary> parse_json_report(const std::string& text);

/// Renders and writes a report; throws std::runtime_error naming the path on
/// I/O failure.
void write_report(const std::vector<EvalSummary>& summaries, ReportFormat format,
                  const std::filesystem::path& path);

}  // namespace dtwavg
