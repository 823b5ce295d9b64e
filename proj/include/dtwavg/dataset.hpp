#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "dtwavg/time_series.hpp"

namespace dtwavg {

struct LabeledSeries {
  std::string label;
  TimeSeries data;
};

/// Equal-length labelled series. Labels are kept but never used by the
/// averaging code.
class Dataset {
 public:
  /// Throws DataError if empty or ragged.
  Dataset(std::string name, std::vector<LabeledSeries> series);

  const std::string& name() const noexcept { return name_; }
  std::size_t size() const noexcept { return series_.size(); }
  std::size_t series_length() const noexcept { return length_; }
  const TimeSeries& operator[](std::size_t i) const { return series_[i].data; }
  const LabeledSeries& at(std::size_t i) const { return series_.at(i); }
  const std::vector<LabeledSeries>& series() const noexcept { return series_; }

 private:
  std::string name_;
  std::vector<LabeledSeries> series_;
  std::size_t length_;
};

/// Reads UCR text files: one series per row, first field the class label,
/// fields separated by commas, tabs or blanks (detected per row). Rows of all
/// files are concatenated in order, so passing {train, test} merges the split.
/// Throws DataError naming file and line on ragged rows, unparsable fields,
/// non-finite values or when no rows are found.
Dataset load_ucr(const std::vector<std::filesystem::path>& paths, std::string name);

/// Parses UCR rows from a string; `source` is used in error messages.
std::vector<LabeledSeries> parse_ucr(std::string_view text, std::string_view source);

/// A single series: one value per line or a single delimited row.
TimeSeries read_series(const std::filesystem::path& path);
TimeSeries parse_series(std::string_view text, std::string_view source);

/// Locates NAME_TRAIN / NAME_TEST files (.tsv, .txt or no extension) under
/// root/NAME or directly under root. Throws DataError if no train file exists.
std::vector<std::filesystem::path> find_ucr_files(const std::filesystem::path& root,
                                                  const std::string& name);

/// Returns a copy with every series z-normalised (a constant series maps to zeros).
Dataset z_normalized(const Dataset& dataset);

/// Seeded Gaussian random walks, labelled "0".
Dataset random_walks(std::string name, std::size_t count, std::size_t length,
                     std::uint64_t seed);

/// Writes a dataset in UCR comma format with round-trip precision.
void write_ucr(const Dataset& dataset, const std::filesystem::path& path);

/// Reference roster: dataset name, merged size and series length.
struct RosterEntry {
  std::string_view name;
  std::size_t count;
  std::size_t length;
};

/// The 15 short UCR datasets used by the evaluation protocols.
const std::vector<RosterEntry>& ucr_roster();

}  // namespace dtwavg
