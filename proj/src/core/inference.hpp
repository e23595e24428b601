#pragma once

#include <cstdint>
#include <vector>

#include "core/types.hpp"

namespace dynnet {

struct WaldResult {
  double statistic = 0;  // variance-ratio statistic minus one
  double nse = 0;        // batch-split numerical standard error of the statistic
  bool reject_5pct = false;
  bool degenerate = false;  // draw differences carried no dispersion
};

// Tests equality of two connectedness measures across posterior draws using
// the ratio of the second raw moment to the central variance of the per-draw
// differences. The statistic exceeds 3.84 under rejection at the nominal 5%
// level. `seed` drives the shuffle used by the batch NSE estimate.
WaldResult wald_equality_test(const std::vector<double>& a, const std::vector<double>& b,
                              std::uint64_t seed);

// Fraction of draws where a strictly exceeds b.
double band_probability(const std::vector<double>& a, const std::vector<double>& b);

struct StackedWaldResult {
  double statistic = 0;
  double critical = 0;  // 95th percentile of chi-squared with k dof
  int k = 0;
  bool reject_5pct = false;
};

// Joint test over several band pairs: the per-pair statistics are summed and
// compared against the chi-squared(k) 95% critical value. Requires k > 1;
// single pairs use wald_equality_test directly.
StackedWaldResult stacked_wald_test(const std::vector<std::vector<double>>& a_draws,
                                    const std::vector<std::vector<double>>& b_draws);

}  // namespace dynnet
