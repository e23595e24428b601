#pragma once

#include "core/types.hpp"

namespace dynnet {

// Per-equation residual variances from univariate AR(p) least-squares fits
// on the full sample; floor 1e-12 with a warning for degenerate series.
Vector ar_residual_variances(const TimeSeriesPanel& panel, int p);

// Minnesota Normal-Wishart prior. Coefficient prior mean: first_lag_prior_mean
// on each variable's own first lag, 0 elsewhere. Prior precision scale Xi0 is
// diagonal with entries g^2 * s_j^2 / shrinkage for the lag-g block of
// variable j (tightness decays with lag), and shrinkage * 1e4 variance for
// the intercept. Wishart prior: alpha0 = N + 2, Gamma0 = diag(s_j^2), so the
// implied prior covariance mean equals the AR residual variances.
PriorSpec build_minnesota_prior(const TimeSeriesPanel& panel, const RunConfig& config);

}  // namespace dynnet
