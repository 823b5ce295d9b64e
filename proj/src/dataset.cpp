#include "dtwavg/dataset.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include "dtwavg/errors.hpp"
#include "rng.hpp"

namespace dtwavg {
namespace fs = std::filesystem;

Dataset::Dataset(std::string name, std::vector<LabeledSeries> series)
    : name_(std::move(name)), series_(std::move(series)), length_(0) {
  if (series_.empty()) throw DataError("dataset '" + name_ + "' is empty");
  length_ = series_.front().data.size();
  for (std::size_t i = 1; i < series_.size(); ++i) {
    if (series_[i].data.size() != length_) {
      throw DataError("dataset '" + name_ + "': series " + std::to_string(i) + " has length " +
                      std::to_string(series_[i].data.size()) + ", expected " +
                      std::to_string(length_));
    }
  }
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n\f\v");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n\f\v");
  return s.substr(first, last - first + 1);
}

std::string where(std::string_view source, std::size_t line) {
  return std::string(source) + ":" + std::to_string(line);
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  char delim = 0;
  if (line.find(',') != std::string_view::npos) {
    delim = ',';
  } else if (line.find('\t') != std::string_view::npos) {
    delim = '\t';
  }
  if (delim != 0) {
    std::size_t start = 0;
    while (true) {
      const auto pos = line.find(delim, start);
      fields.push_back(trim(line.substr(start, pos == std::string_view::npos ? pos : pos - start)));
      if (pos == std::string_view::npos) break;
      start = pos + 1;
    }
    return fields;
  }
  std::size_t pos = 0;
  while (pos < line.size()) {
    const auto start = line.find_first_not_of(" \f\v", pos);
    if (start == std::string_view::npos) break;
    auto end = line.find_first_of(" \f\v", start);
    if (end == std::string_view::npos) end = line.size();
    fields.push_back(line.substr(start, end - start));
    pos = end;
  }
  return fields;
}

double parse_number(std::string_view field, std::string_view source, std::size_t line) {
  std::string_view text = field;
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw DataError(where(source, line) + ": cannot parse '" + std::string(field) +
                    "' as a number");
  }
  if (!std::isfinite(value)) {
    throw DataError(where(source, line) + ": non-finite value '" + std::string(field) + "'");
  }
  return value;
}

// Calls fn(line_number, trimmed_line) for every non-blank line.
template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    const auto line = trim(text.substr(pos, end - pos));
    if (!line.empty()) fn(number, line);
    pos = end + 1;
  }
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

namespace {

// expected == 0 lets the first row fix the series length.
std::vector<LabeledSeries> parse_rows(std::string_view text, std::string_view source,
                                      std::size_t expected) {
  std::vector<LabeledSeries> rows;
  for_each_line(text, [&](std::size_t number, std::string_view line) {
    const auto fields = split_fields(line);
    if (fields.size() < 2) {
      throw DataError(where(source, number) + ": expected a label and at least one value");
    }
    std::vector<double> values;
    values.reserve(fields.size() - 1);
    for (std::size_t f = 1; f < fields.size(); ++f) {
      values.push_back(parse_number(fields[f], source, number));
    }
    if (expected == 0) {
      expected = values.size();
    } else if (values.size() != expected) {
      throw DataError(where(source, number) + ": row has " + std::to_string(values.size()) +
                      " values, expected " + std::to_string(expected));
    }
    rows.push_back({std::string(fields[0]), TimeSeries(std::move(values))});
  });
  if (rows.empty()) throw DataError(std::string(source) + ": no data rows");
  return rows;
}

}  // namespace

std::vector<LabeledSeries> parse_ucr(std::string_view text, std::string_view source) {
  return parse_rows(text, source, 0);
}

Dataset load_ucr(const std::vector<fs::path>& paths, std::string name) {
  if (paths.empty()) throw DataError("dataset '" + name + "': no input files");
  std::vector<LabeledSeries> all;
  for (const auto& path : paths) {
    auto rows = parse_rows(read_file(path), path.string(),
                           all.empty() ? 0 : all.front().data.size());
    for (auto& row : rows) all.push_back(std::move(row));
  }
  return Dataset(std::move(name), std::move(all));
}

TimeSeries parse_series(std::string_view text, std::string_view source) {
  std::vector<double> values;
  std::size_t lines = 0;
  for_each_line(text, [&](std::size_t number, std::string_view line) {
    ++lines;
    const auto fields = split_fields(line);
    if (lines > 1 && (fields.size() != 1 || values.size() != lines - 1)) {
      throw DataError(where(source, number) +
                      ": expected one value per line or a single delimited row");
    }
    for (const auto field : fields) values.push_back(parse_number(field, source, number));
  });
  if (values.empty()) throw DataError(std::string(source) + ": no values");
  return TimeSeries(std::move(values));
}

TimeSeries read_series(const fs::path& path) {
  return parse_series(read_file(path), path.string());
}

std::vector<fs::path> find_ucr_files(const fs::path& root, const std::string& name) {
  auto find = [&](const std::string& split) -> fs::path {
    for (const auto& dir : {root / name, root}) {
      for (const char* ext : {".tsv", ".txt", ""}) {
        const fs::path candidate = dir / (name + "_" + split + ext);
        if (fs::is_regular_file(candidate)) return candidate;
      }
    }
    return {};
  };
  const auto train = find("TRAIN");
  if (train.empty()) {
    throw DataError("no " + name + "_TRAIN file under '" + root.string() + "'");
  }
  std::vector<fs::path> out{train};
  if (const auto test = find("TEST"); !test.empty()) out.push_back(test);
  return out;
}

Dataset z_normalized(const Dataset& dataset) {
  std::vector<LabeledSeries> out;
  out.reserve(dataset.size());
  for (const auto& [label, data] : dataset.series()) {
    const double n = static_cast<double>(data.size());
    double mean = 0.0;
    for (double v : data) mean += v;
    mean /= n;
    double var = 0.0;
    for (double v : data) var += (v - mean) * (v - mean);
    const double sd = std::sqrt(var / n);
    std::vector<double> values(data.size(), 0.0);
    if (sd > 0.0) {
      for (std::size_t i = 0; i < values.size(); ++i) values[i] = (data[i] - mean) / sd;
    }
    out.push_back({label, TimeSeries(std::move(values))});
  }
  return Dataset(dataset.name(), std::move(out));
}

Dataset random_walks(std::string name, std::size_t count, std::size_t length, std::uint64_t seed) {
  if (count == 0 || length == 0) throw std::invalid_argument("random walks need count, length >= 1");
  std::mt19937_64 rng(seed);
  std::vector<LabeledSeries> out;
  out.reserve(count);
  for (std::size_t s = 0; s < count; ++s) {
    std::vector<double> values(length);
    double level = detail::gaussian(rng);
    for (auto& v : values) {
      v = level;
      level += detail::gaussian(rng);
    }
    out.push_back({"0", TimeSeries(std::move(values))});
  }
  return Dataset(std::move(name), std::move(out));
}

void write_ucr(const Dataset& dataset, const fs::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  char buf[32];
  for (const auto& [label, data] : dataset.series()) {
    out << label;
    for (double v : data) {
      std::snprintf(buf, sizeof buf, "%.17g", v);
      out << ',' << buf;
    }
    out << '\n';
  }
  if (!out) throw std::runtime_error("write to '" + path.string() + "' failed");
}

const std::vector<RosterEntry>& ucr_roster() {
  static const std::vector<RosterEntry> roster{
      {"ItalyPowerDemand", 1096, 24},
      {"SyntheticControl", 600, 60},
      {"SonyAIBORobotSurface2", 980, 65},
      {"SonyAIBORobotSurface1", 621, 70},
      {"ProximalPhalanxTW", 605, 80},
      {"ProximalPhalanxOutlineCorrect", 891, 80},
      {"ProximalPhalanxOutlineAgeGroup", 605, 80},
      {"PhalangesOutlinesCorrect", 2658, 80},
      {"MiddlePhalanxTW", 553, 80},
      {"MiddlePhalanxOutlineCorrect", 891, 80},
      {"MiddlePhalanxOutlineAgeGroup", 554, 80},
      {"DistalPhalanxTW", 539, 80},
      {"DistalPhalanxOutlineCorrect", 876, 80},
      {"DistalPhalanxOutlineAgeGroup", 539, 80},
      {"TwoLeadECG", 1162, 82},
  };
  return roster;
}

}  // namespace dtwavg
