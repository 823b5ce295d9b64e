#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace dtwavg {

/// Monotone alignment between two series of lengths rows() and cols().
///
/// Points are stored 0-based: the path starts at (0, 0), ends at
/// (rows-1, cols-1) and advances by (1,0), (0,1) or (1,1) at each step.
class WarpingPath {
 public:
  using Point = std::pair<std::size_t, std::size_t>;

  /// Validates boundary and step conditions; throws std::invalid_argument.
  WarpingPath(std::size_t rows, std::size_t cols, std::vector<Point> points);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return points_.size(); }
  const std::vector<Point>& points() const noexcept { return points_; }

  auto begin() const noexcept { return points_.begin(); }
  auto end() const noexcept { return points_.end(); }

  /// Same alignment seen from the other series.
  WarpingPath transposed() const;

  /// The main diagonal of an n x n grid.
  static WarpingPath diagonal(std::size_t n);

  friend bool operator==(const WarpingPath&, const WarpingPath&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Point> points_;
};

}  // namespace dtwavg
