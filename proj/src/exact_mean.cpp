#include "dtwavg/exact_mean.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "dtwavg/dtw.hpp"
#include "dtwavg/errors.hpp"

namespace dtwavg {

double frechet(const Sample& sample, const TimeSeries& z) {
  double total = 0.0;
  for (const auto& x : sample) total += dtw_cost(x, z);
  return total;
}

BlockCost block_cost(std::span<const double> values) {
  if (values.empty()) throw std::invalid_argument("block_cost of an empty multiset");
  const double n = static_cast<double>(values.size());
  const double mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
  double cost = 0.0;
  for (double v : values) cost += (v - mean) * (v - mean);
  return {mean, cost};
}

WarpingPath MeanAlignment::path(std::size_t member) const {
  std::vector<WarpingPath::Point> pts;
  std::size_t cols = 0;
  for (std::size_t t = 0; t < blocks.size(); ++t) {
    const Block& b = blocks[t][member];
    for (std::size_t i = b.first; i <= b.last; ++i) pts.emplace_back(t, i);
    cols = std::max(cols, b.last + 1);
  }
  return WarpingPath(blocks.size(), cols, std::move(pts));
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Costs closer than this (relative) are treated as ties when choosing the
// shortest optimal mean.
constexpr double kTieTolerance = 1e-12;

MeanResult finish(const Sample& sample, MeanAlignment alignment, MeanMethod method) {
  const std::size_t length = alignment.length();
  std::vector<double> mean(length);
  std::vector<double> scratch;
  for (std::size_t t = 0; t < length; ++t) {
    scratch.clear();
    for (std::size_t j = 0; j < sample.size(); ++j) {
      const Block& b = alignment.blocks[t][j];
      for (std::size_t i = b.first; i <= b.last; ++i) scratch.push_back(sample[j][i]);
    }
    mean[t] = block_cost(scratch).mean;
  }
  MeanResult result{TimeSeries(std::move(mean))};
  result.method = method;
  result.converged = true;
  std::vector<WarpingPath> paths;
  double value = 0.0;
  for (std::size_t j = 0; j < sample.size(); ++j) {
    paths.push_back(alignment.path(j));
    value += cost_of_path(result.mean, sample[j], paths.back());
  }
  result.frechet_value = value;
  result.alignment = std::move(paths);
  return result;
}

template <std::size_t K>
class ExactDp {
 public:
  explicit ExactDp(const Sample& sample) {
    double shift = 0.0;
    std::size_t total = 0;
    for (const auto& x : sample) {
      shift += std::accumulate(x.begin(), x.end(), 0.0);
      total += x.size();
    }
    // Centering leaves every block cost unchanged but keeps the prefix sums
    // small, which limits cancellation in q - s^2 / c.
    shift /= static_cast<double>(total);

    std::size_t stride = 1;
    for (std::size_t j = K; j-- > 0;) {
      len_[j] = sample[j].size();
      stride_[j] = stride;
      stride *= len_[j];
      sum_[j].assign(len_[j] + 1, 0.0);
      sq_[j].assign(len_[j] + 1, 0.0);
      for (std::size_t i = 0; i < len_[j]; ++i) {
        const double v = sample[j][i] - shift;
        sum_[j][i + 1] = sum_[j][i] + v;
        sq_[j][i + 1] = sq_[j][i] + v * v;
      }
    }
    states_ = stride;
    cost_.assign(states_, kInf);
    length_.assign(states_, 0);
    prev_.assign(states_, kStart);
    mask_.assign(states_, 0);
  }

  MeanAlignment solve() {
    std::array<std::size_t, K> ends{};
    for (std::size_t idx = 0; idx < states_; ++idx) {
      decode(idx, ends);
      relax_state(idx, ends);
    }
    return backtrace();
  }

 private:
  static constexpr std::size_t kStart = std::numeric_limits<std::size_t>::max();

  struct Candidate {
    double cost = kInf;
    std::size_t length = 0;
    std::size_t prev = kStart;
    unsigned mask = 0;
  };

  // ends are 1-based last matched indices.
  void decode(std::size_t idx, std::array<std::size_t, K>& ends) const {
    for (std::size_t j = 0; j < K; ++j) {
      ends[j] = idx / stride_[j] % len_[j] + 1;
    }
  }

  static bool better(double cost, std::size_t length, const Candidate& best) {
    const double slack = kTieTolerance * std::max(1.0, std::abs(best.cost));
    if (cost < best.cost - slack) return true;
    return cost <= best.cost + slack && length < best.length;
  }

  void relax_state(std::size_t idx, const std::array<std::size_t, K>& ends) {
    Candidate best;
    // A mean of length one matching every member entirely.
    {
      double s = 0.0, q = 0.0, c = 0.0;
      for (std::size_t j = 0; j < K; ++j) {
        s += sum_[j][ends[j]];
        q += sq_[j][ends[j]];
        c += static_cast<double>(ends[j]);
      }
      best.cost = std::max(0.0, q - s * s / c);
      best.length = 1;
    }
    for (unsigned mask = 0; mask < (1u << K); ++mask) {
      scan<0>(idx, ends, mask, 0, 0.0, 0.0, 0.0, best);
    }
    cost_[idx] = best.cost;
    length_[idx] = best.length;
    prev_[idx] = best.prev;
    mask_[idx] = best.mask;
  }

  // Enumerates previous ends member by member, accumulating the block sums.
  template <std::size_t J>
  void scan(std::size_t idx, const std::array<std::size_t, K>& ends, unsigned mask,
            std::size_t prev, double s, double q, double c, Candidate& best) const {
    if constexpr (J == K) {
      if (prev == idx) return;  // no fresh index consumed
      const double total = cost_[prev] + std::max(0.0, q - s * s / c);
      const std::size_t length = length_[prev] + 1;
      if (better(total, length, best)) best = {total, length, prev, mask};
    } else {
      const std::size_t end = ends[J];
      const std::size_t repeat = (mask >> J) & 1u;
      const std::size_t hi = repeat ? end : end - 1;
      const double s_end = sum_[J][end];
      const double q_end = sq_[J][end];
      for (std::size_t e = 1; e <= hi; ++e) {
        const std::size_t first = e + 1 - repeat;  // 1-based block start
        scan<J + 1>(idx, ends, mask, prev + (e - 1) * stride_[J], s + s_end - sum_[J][first - 1],
                    q + q_end - sq_[J][first - 1], c + static_cast<double>(end - first + 1), best);
      }
    }
  }

  MeanAlignment backtrace() const {
    MeanAlignment out;
    std::size_t idx = states_ - 1;
    std::array<std::size_t, K> ends{};
    std::array<std::size_t, K> prev_ends{};
    while (true) {
      decode(idx, ends);
      std::vector<Block> row(K);
      const std::size_t prev = prev_[idx];
      if (prev == kStart) {
        for (std::size_t j = 0; j < K; ++j) row[j] = {0, ends[j] - 1};
        out.blocks.push_back(std::move(row));
        break;
      }
      decode(prev, prev_ends);
      for (std::size_t j = 0; j < K; ++j) {
        const std::size_t repeat = (mask_[idx] >> j) & 1u;
        row[j] = {prev_ends[j] - repeat, ends[j] - 1};
      }
      out.blocks.push_back(std::move(row));
      idx = prev;
    }
    std::reverse(out.blocks.begin(), out.blocks.end());
    return out;
  }

  std::array<std::size_t, K> len_{};
  std::array<std::size_t, K> stride_{};
  std::array<std::vector<double>, K> sum_;
  std::array<std::vector<double>, K> sq_;
  std::size_t states_ = 0;
  std::vector<double> cost_;
  std::vector<std::size_t> length_;
  std::vector<std::size_t> prev_;
  std::vector<unsigned> mask_;
};

}  // namespace

void check_exact_guard(std::size_t members, std::size_t longest, const ExactGuard& guard) {
  if (members != 2 && members != 3) {
    throw std::invalid_argument("exact mean supports samples of 2 or 3 series, got " +
                                std::to_string(members));
  }
  if (guard.allow_slow) return;
  const std::size_t limit = members == 2 ? guard.max_length_pair : guard.max_length_triple;
  if (longest > limit) {
    throw GuardError("exact mean of " + std::to_string(members) + " series refuses length " +
                     std::to_string(longest) + " above the limit " + std::to_string(limit) +
                     " (raise --max-n or pass --allow-slow)");
  }
}

MeanResult exact_mean_dp(const Sample& sample, const ExactGuard& guard) {
  return exact_mean_dp(sample, guard, nullptr);
}

MeanResult exact_mean_dp(const Sample& sample, const ExactGuard& guard, MeanAlignment* alignment) {
  std::size_t longest = 0;
  for (const auto& x : sample) longest = std::max(longest, x.size());
  check_exact_guard(sample.size(), longest, guard);
  MeanAlignment joint =
      sample.size() == 2 ? ExactDp<2>(sample).solve() : ExactDp<3>(sample).solve();
  if (alignment) *alignment = joint;
  return finish(sample, std::move(joint), MeanMethod::ExactDp);
}

namespace {

// Depth-first enumeration of joint alignments with branch-and-bound.
class BruteForce {
 public:
  BruteForce(const Sample& sample, std::size_t max_length)
      : sample_(sample), max_length_(max_length), ends_(sample.size(), 0) {}

  MeanAlignment run() {
    descend();
    return best_;
  }

 private:
  void descend() {
    const std::size_t k = sample_.size();
    bool done = true;
    for (std::size_t j = 0; j < k; ++j) done = done && ends_[j] == sample_[j].size();
    if (done && !current_.empty() &&
        (partial_ < best_cost_ ||
         (partial_ == best_cost_ && current_.size() < best_.blocks.size()))) {
      best_cost_ = partial_;
      best_.blocks = current_;
    }
    if (current_.size() == max_length_) return;
    std::vector<Block> row(k);
    choose(0, row);
  }

  // Picks the block of member j for the next mean element.
  void choose(std::size_t j, std::vector<Block>& row) {
    if (j == sample_.size()) {
      values_.clear();
      for (std::size_t m = 0; m < row.size(); ++m) {
        for (std::size_t i = row[m].first; i <= row[m].last; ++i) values_.push_back(sample_[m][i]);
      }
      const double step = block_cost(values_).cost;
      if (partial_ + step >= best_cost_) return;
      const auto saved_ends = ends_;
      for (std::size_t m = 0; m < row.size(); ++m) ends_[m] = row[m].last + 1;
      current_.push_back(row);
      partial_ += step;
      descend();
      partial_ -= step;
      current_.pop_back();
      ends_ = saved_ends;
      return;
    }
    const std::size_t n = sample_[j].size();
    const std::size_t end = ends_[j];  // count of indices matched so far
    // Fresh block: starts right after the last matched index.
    for (std::size_t last = end; last < n; ++last) {
      row[j] = {end, last};
      choose(j + 1, row);
    }
    // Block starting on the last matched index (vertical step).
    if (end > 0) {
      for (std::size_t last = end - 1; last < n; ++last) {
        row[j] = {end - 1, last};
        choose(j + 1, row);
      }
    }
  }

  const Sample& sample_;
  std::size_t max_length_;
  std::vector<std::size_t> ends_;
  std::vector<std::vector<Block>> current_;
  std::vector<double> values_;
  double partial_ = 0.0;
  double best_cost_ = kInf;
  MeanAlignment best_;
};

}  // namespace

MeanResult exact_mean_bruteforce(const Sample& sample, std::size_t max_length) {
  if (sample.empty() || sample.size() > 3) {
    throw GuardError("brute-force mean supports 1 to 3 series, got " +
                     std::to_string(sample.size()));
  }
  std::size_t total = 0;
  for (const auto& x : sample) {
    if (x.size() > 4) {
      throw GuardError("brute-force mean refuses series longer than 4 (got " +
                       std::to_string(x.size()) + ")");
    }
    total += x.size();
  }
  if (max_length == 0 || max_length > total) {
    throw GuardError("brute-force mean length bound must lie in [1, " + std::to_string(total) +
                     "], got " + std::to_string(max_length));
  }
  return finish(sample, BruteForce(sample, max_length).run(), MeanMethod::ExactBruteforce);
}

}  // namespace dtwavg
