#include "core/connectedness.hpp"

#include <algorithm>
#include <cmath>

#include "core/errors.hpp"

namespace dynnet {

ConnectednessSet compute_connectedness(const Matrix& theta) {
  const int N = static_cast<int>(theta.rows());
  if (N < 2 || theta.cols() != N)
    throw ConfigError("adjacency matrix must be square with at least 2 nodes");
  ConnectednessSet set;
  set.from_degree = Vector::Zero(N);
  set.to_degree = Vector::Zero(N);
  set.pairwise = Matrix::Zero(N, N);
  const double scale = 100.0 / N;
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) {
      if (i == j) continue;
      set.from_degree(i) += theta(i, j);
      set.to_degree(j) += theta(i, j);
      set.pairwise(i, j) = scale * (theta(j, i) - theta(i, j));
    }
  }
  set.from_degree *= scale;
  set.to_degree *= scale;
  set.total = set.from_degree.sum();
  set.net = set.to_degree - set.from_degree;
  return set;
}

ConnectednessSet reconstruct_time_domain(const std::vector<ConnectednessSet>& per_band) {
  if (per_band.empty()) throw ConfigError("reconstruction needs at least one band");
  ConnectednessSet sum = per_band.front();
  for (std::size_t b = 1; b < per_band.size(); ++b) {
    const ConnectednessSet& s = per_band[b];
    if (s.from_degree.size() != sum.from_degree.size())
      throw ConfigError("band measure dimensions disagree in reconstruction");
    sum.total += s.total;
    sum.from_degree += s.from_degree;
    sum.to_degree += s.to_degree;
    sum.net += s.net;
    sum.pairwise += s.pairwise;
  }
  return sum;
}

double quantile_type7(std::vector<double> values, double prob) {
  if (values.empty()) throw ConfigError("quantile of empty sample");
  if (prob < 0.0 || prob > 1.0) throw ConfigError("quantile probability outside [0, 1]");
  std::sort(values.begin(), values.end());
  const double h = (static_cast<double>(values.size()) - 1.0) * prob;
  const auto lo = static_cast<std::size_t>(std::floor(h));
  if (lo + 1 >= values.size()) return values.back();
  const double frac = h - static_cast<double>(lo);
  return values[lo] + frac * (values[lo + 1] - values[lo]);
}

PosteriorSummary summarize_draws(const std::vector<double>& values) {
  PosteriorSummary s;
  s.median = quantile_type7(values, 0.5);
  s.q025 = quantile_type7(values, 0.025);
  s.q975 = quantile_type7(values, 0.975);
  return s;
}

}  // namespace dynnet
