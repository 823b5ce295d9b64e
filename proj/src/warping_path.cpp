#include "dtwavg/warping_path.hpp"

#include <stdexcept>
#include <string>

namespace dtwavg {

WarpingPath::WarpingPath(std::size_t rows, std::size_t cols, std::vector<Point> points)
    : rows_(rows), cols_(cols), points_(std::move(points)) {
  if (rows_ == 0 || cols_ == 0) {
    throw std::invalid_argument("warping path order must be positive");
  }
  if (points_.empty() || points_.front() != Point{0, 0} ||
      points_.back() != Point{rows_ - 1, cols_ - 1}) {
    throw std::invalid_argument("warping path violates the boundary conditions");
  }
  for (std::size_t l = 1; l < points_.size(); ++l) {
    const auto [i0, j0] = points_[l - 1];
    const auto [i1, j1] = points_[l];
    const bool di = i1 == i0 + 1;
    const bool dj = j1 == j0 + 1;
    const bool ok = (di && (dj || j1 == j0)) || (dj && i1 == i0);
    if (!ok) {
      throw std::invalid_argument("warping path violates the step condition at point " +
                                  std::to_string(l));
    }
  }
}

WarpingPath WarpingPath::transposed() const {
  std::vector<Point> pts;
  pts.reserve(points_.size());
  for (const auto& [i, j] : points_) pts.emplace_back(j, i);
  return WarpingPath(cols_, rows_, std::move(pts));
}

WarpingPath WarpingPath::diagonal(std::size_t n) {
  std::vector<Point> pts;
  pts.reserve(n);
  for (std::size_t i = 0; i < n; ++i) pts.emplace_back(i, i);
  return WarpingPath(n, n, std::move(pts));
}

}  // namespace dtwavg
