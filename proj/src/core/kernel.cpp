#include "core/kernel.hpp"

#include <cmath>

#include "core/errors.hpp"

namespace dynnet {

KernelWeights compute_kernel_weights(int T, int s, double W, double scale) {
  if (W <= 0) throw ConfigError("bandwidth must be positive, got " + std::to_string(W));
  if (scale <= 0)
    throw ConfigError("bandwidth scale must be positive, got " + std::to_string(scale));
  if (T < 1) throw ConfigError("kernel weights need at least one observation");
  if (s < 1 || s > T)
    throw ConfigError("focal index " + std::to_string(s) + " outside 1.." + std::to_string(T));
  const double sd = scale * W;
  const double inv_sqrt_2pi = 0.3989422804014327;
  KernelWeights kw;
  kw.bandwidth = W;
  kw.rho.resize(T);
  double sum_w = 0.0, sum_w2 = 0.0;
  for (int t = 1; t <= T; ++t) {
    const double z = (static_cast<double>(s) - t) / sd;
    const double w = inv_sqrt_2pi * std::exp(-0.5 * z * z);
    kw.rho(t - 1) = w;
    sum_w += w;
    sum_w2 += w * w;
  }
  const double ess = sum_w * sum_w / sum_w2;
  kw.rho *= ess / sum_w;
  kw.ess = ess;
  return kw;
}

}  // namespace dynnet
