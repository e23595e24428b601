#pragma once

#include <vector>

#include "core/types.hpp"

namespace dynnet {

// Network measures for one band adjacency matrix theta (row-normalized by
// the full-spectrum row sums, so a full partition's thetas sum to a matrix
// with unit rows). All measures are percentages of total forecast-error
// variance: total = 100 * offdiag(theta) / N, from/to are row/column
// off-diagonal sums on the same scale, net = to - from, and
// pairwise(i, j) = 100 * (theta(j, i) - theta(i, j)) / N.
ConnectednessSet compute_connectedness(const Matrix& theta);

// Element-wise sum of a full partition's band measures; by additivity of the
// band shares this equals the full-spectrum (time-domain) measures.
ConnectednessSet reconstruct_time_domain(const std::vector<ConnectednessSet>& per_band);

// Linear-interpolation quantile (the common "type 7" rule) of unsorted data.
double quantile_type7(std::vector<double> values, double prob);

// Median and central 95% interval of one scalar across posterior draws.
PosteriorSummary summarize_draws(const std::vector<double>& values);

}  // namespace dynnet
