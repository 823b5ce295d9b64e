#include "dtwavg/dtw.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "dtwavg/errors.hpp"

namespace dtwavg {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

inline double sq(double v) { return v * v; }

// Full (m+1) x (n+1) table of accumulated squared costs with an infinite border.
std::vector<double> cost_table(const TimeSeries& x, const TimeSeries& y) {
  const std::size_t m = x.size();
  const std::size_t n = y.size();
  const std::size_t w = n + 1;
  std::vector<double> d((m + 1) * w, kInf);
  d[0] = 0.0;
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      const double best = std::min({d[(i - 1) * w + j - 1], d[(i - 1) * w + j], d[i * w + j - 1]});
      d[i * w + j] = best + sq(x[i - 1] - y[j - 1]);
    }
  }
  return d;
}

}  // namespace

double cost_of_path(const TimeSeries& x, const TimeSeries& y, const WarpingPath& p) {
  if (p.rows() != x.size() || p.cols() != y.size()) {
    throw std::invalid_argument("warping path of order " + std::to_string(p.rows()) + "x" +
                                std::to_string(p.cols()) + " does not match series of lengths " +
                                std::to_string(x.size()) + " and " + std::to_string(y.size()));
  }
  double cost = 0.0;
  for (const auto& [i, j] : p) cost += sq(x[i] - y[j]);
  return cost;
}

DtwResult dtw(const TimeSeries& x, const TimeSeries& y) {
  const std::size_t m = x.size();
  const std::size_t n = y.size();
  const std::size_t w = n + 1;
  const auto d = cost_table(x, y);

  std::vector<WarpingPath::Point> pts;
  pts.reserve(m + n);
  std::size_t i = m;
  std::size_t j = n;
  pts.emplace_back(i - 1, j - 1);
  while (i > 1 || j > 1) {
    const double diag = d[(i - 1) * w + j - 1];
    const double up = d[(i - 1) * w + j];
    const double left = d[i * w + j - 1];
    if (diag <= up && diag <= left) {
      --i;
      --j;
    } else if (up <= left) {
      --i;
    } else {
      --j;
    }
    pts.emplace_back(i - 1, j - 1);
  }
  std::reverse(pts.begin(), pts.end());

  const double cost = d[m * w + n];
  return DtwResult{std::sqrt(cost), cost, WarpingPath(m, n, std::move(pts))};
}

double dtw_cost(const TimeSeries& x, const TimeSeries& y) {
  // Two rolling rows; same recurrence as cost_table().
  const std::size_t m = x.size();
  const std::size_t n = y.size();
  std::vector<double> prev(n + 1, kInf);
  std::vector<double> cur(n + 1, kInf);
  prev[0] = 0.0;
  for (std::size_t i = 1; i <= m; ++i) {
    cur[0] = kInf;
    const double xi = x[i - 1];
    for (std::size_t j = 1; j <= n; ++j) {
      cur[j] = std::min({prev[j - 1], prev[j], cur[j - 1]}) + sq(xi - y[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[n];
}

double dtw_distance(const TimeSeries& x, const TimeSeries& y) {
  return std::sqrt(dtw_cost(x, y));
}

namespace {

void extend(std::size_t m, std::size_t n, std::vector<WarpingPath::Point>& prefix,
            std::vector<WarpingPath>& out) {
  const auto [i, j] = prefix.back();
  if (i == m - 1 && j == n - 1) {
    out.emplace_back(m, n, prefix);
    return;
  }
  // Lexicographic order of the next point: (i, j+1) < (i+1, j) < (i+1, j+1).
  if (j + 1 < n) {
    prefix.emplace_back(i, j + 1);
    extend(m, n, prefix, out);
    prefix.pop_back();
  }
  if (i + 1 < m) {
    prefix.emplace_back(i + 1, j);
    extend(m, n, prefix, out);
    prefix.pop_back();
    if (j + 1 < n) {
      prefix.emplace_back(i + 1, j + 1);
      extend(m, n, prefix, out);
      prefix.pop_back();
    }
  }
}

}  // namespace

std::vector<WarpingPath> enumerate_paths(std::size_t m, std::size_t n, EnumerationGuard guard) {
  if (m == 0 || n == 0) {
    throw std::invalid_argument("warping path order must be positive");
  }
  if (m > guard.max_rows || n > guard.max_cols) {
    throw GuardError("path enumeration of order " + std::to_string(m) + "x" + std::to_string(n) +
                     " exceeds the limit " + std::to_string(guard.max_rows) + "x" +
                     std::to_string(guard.max_cols));
  }
  std::vector<WarpingPath> out;
  std::vector<WarpingPath::Point> prefix{{0, 0}};
  prefix.reserve(m + n);
  extend(m, n, prefix, out);
  return out;
}

double dtw_bruteforce(const TimeSeries& x, const TimeSeries& y, EnumerationGuard guard) {
  double best = kInf;
  for (const auto& p : enumerate_paths(x.size(), y.size(), guard)) {
    best = std::min(best, cost_of_path(x, y, p));
  }
  return std::sqrt(best);
}

}  // namespace dtwavg
