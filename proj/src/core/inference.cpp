#include "core/inference.hpp"

#include <algorithm>
#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>
#include <limits>
#include <numeric>

#include "core/errors.hpp"
#include "core/rng.hpp"

namespace dynnet {

namespace {

void check_pair(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size())
    throw ConfigError("draw vectors differ in length: " + std::to_string(a.size()) +
                      " vs " + std::to_string(b.size()));
  if (a.empty()) throw ConfigError("equality test needs at least one draw");
}

// Ratio statistic on a set of differences; infinite when the central
// variance vanishes but the mean square does not.
double ratio_statistic(const double* d, std::size_t n, bool* degenerate) {
  double mean = 0;
  double mean_sq = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mean += d[i];
    mean_sq += d[i] * d[i];
  }
  mean /= static_cast<double>(n);
  mean_sq /= static_cast<double>(n);
  double var = 0;
  for (std::size_t i = 0; i < n; ++i) var += (d[i] - mean) * (d[i] - mean);
  var /= static_cast<double>(n);
  if (var <= 0.0) {
    if (degenerate) *degenerate = true;
    return mean_sq > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
  }
  return mean_sq / var - 1.0;
}

}  // namespace

WaldResult wald_equality_test(const std::vector<double>& a, const std::vector<double>& b,
                              std::uint64_t seed) {
  check_pair(a, b);
  const std::size_t R = a.size();
  if (R < 20) throw ConfigError("equality test needs at least 20 draws, got " +
                                std::to_string(R));
  std::vector<double> diff(R);
  for (std::size_t r = 0; r < R; ++r) diff[r] = a[r] - b[r];

  WaldResult result;
  result.statistic = ratio_statistic(diff.data(), R, &result.degenerate);
  result.reject_5pct = !result.degenerate && result.statistic > 3.84;
  if (result.degenerate) {
    result.nse = std::numeric_limits<double>::quiet_NaN();
    return result;
  }

  // Shuffle, split into 10 batches, and take the spread of batch statistics.
  std::vector<double> shuffled = diff;
  RngEngine rng(derive_seed(seed, 0x6e7365ULL));  // "nse"
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  constexpr int kBatches = 10;
  std::vector<double> stats;
  stats.reserve(kBatches);
  std::size_t offset = 0;
  for (int batch = 0; batch < kBatches; ++batch) {
    std::size_t size = R / kBatches + (batch < static_cast<int>(R % kBatches) ? 1 : 0);
    bool batch_degenerate = false;
    double s = ratio_statistic(shuffled.data() + offset, size, &batch_degenerate);
    stats.push_back(batch_degenerate ? 0.0 : s);
    offset += size;
  }
  double mean = std::accumulate(stats.begin(), stats.end(), 0.0) / kBatches;
  double var = 0;
  for (double s : stats) var += (s - mean) * (s - mean);
  var /= kBatches - 1;
  result.nse = std::sqrt(var) / std::sqrt(static_cast<double>(kBatches));
  return result;
}

double band_probability(const std::vector<double>& a, const std::vector<double>& b) {
  check_pair(a, b);
  std::size_t count = 0;
  for (std::size_t r = 0; r < a.size(); ++r)
    if (a[r] > b[r]) ++count;
  return static_cast<double>(count) / static_cast<double>(a.size());
}

StackedWaldResult stacked_wald_test(const std::vector<std::vector<double>>& a_draws,
                                    const std::vector<std::vector<double>>& b_draws) {
  if (a_draws.size() != b_draws.size())
    throw ConfigError("stacked test pair lists differ in length");
  const int k = static_cast<int>(a_draws.size());
  if (k < 2) throw ConfigError("stacked test needs more than one pair");
  StackedWaldResult result;
  result.k = k;
  for (int i = 0; i < k; ++i) {
    check_pair(a_draws[i], b_draws[i]);
    std::vector<double> diff(a_draws[i].size());
    for (std::size_t r = 0; r < diff.size(); ++r) diff[r] = a_draws[i][r] - b_draws[i][r];
    bool degenerate = false;
    double s = ratio_statistic(diff.data(), diff.size(), &degenerate);
    if (degenerate && std::isinf(s)) {
      result.statistic = std::numeric_limits<double>::infinity();
      break;
    }
    result.statistic += degenerate ? 0.0 : s;
  }
  boost::math::chi_squared chi2(k);
  result.critical = boost::math::quantile(chi2, 0.95);
  result.reject_5pct = result.statistic > result.critical;
  return result;
}

}  // namespace dynnet
