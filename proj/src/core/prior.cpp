#include "core/prior.hpp"

#include <iostream>

#include "core/errors.hpp"

namespace dynnet {

Vector ar_residual_variances(const TimeSeriesPanel& panel, int p) {
  const int T = static_cast<int>(panel.rows());
  const int N = static_cast<int>(panel.cols());
  if (T <= p) throw DataError("panel too short for lag order " + std::to_string(p));
  const int Teff = T - p;
  Vector s2(N);
  Matrix A(Teff, p + 1);
  Vector y(Teff);
  for (int j = 0; j < N; ++j) {
    for (int i = 0; i < Teff; ++i) {
      A(i, 0) = 1.0;
      for (int g = 1; g <= p; ++g) A(i, g) = panel.values(p + i - g, j);
      y(i) = panel.values(p + i, j);
    }
    Vector beta = (A.transpose() * A).ldlt().solve(A.transpose() * y);
    const double rss = (y - A * beta).squaredNorm();
    const double dof = std::max(1, Teff - (p + 1));
    double v = rss / dof;
    if (v < 1e-12) {
      std::cerr << "warning: near-degenerate series '" << panel.series_names[j]
                << "' in prior scale; flooring residual variance\n";
      v = 1e-12;
    }
    s2(j) = v;
  }
  return s2;
}

PriorSpec build_minnesota_prior(const TimeSeriesPanel& panel, const RunConfig& config) {
  const int N = static_cast<int>(panel.cols());
  const int p = config.lag_order;
  if (panel.rows() <= p)
    throw DataError("panel length " + std::to_string(panel.rows()) +
                    " insufficient for lag order " + std::to_string(p));
  if (config.shrinkage <= 0)
    throw ConfigError("shrinkage must be positive, got " + std::to_string(config.shrinkage));
  const int k = 1 + N * p;
  const Vector s2 = ar_residual_variances(panel, p);

  PriorSpec prior;
  prior.phi0 = Matrix::Zero(k, N);
  for (int j = 0; j < N; ++j) prior.phi0(1 + j, j) = config.first_lag_prior_mean;

  // Xi0 stores prior precision scale: coefficient variance (given unit error
  // variance) is shrinkage / (g^2 * s_j^2); the intercept is nearly diffuse.
  prior.xi0 = Matrix::Zero(k, k);
  prior.xi0(0, 0) = 1.0 / (config.shrinkage * 1e4);
  for (int g = 1; g <= p; ++g)
    for (int j = 0; j < N; ++j) {
      const int idx = 1 + (g - 1) * N + j;
      prior.xi0(idx, idx) = static_cast<double>(g) * g * s2(j) / config.shrinkage;
    }

  prior.alpha0 = N + 2;
  prior.gamma0 = s2.asDiagonal();
  return prior;
}

}  // namespace dynnet
