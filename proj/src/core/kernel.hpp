#pragma once

#include "core/types.hpp"

namespace dynnet {

// Gaussian kernel weights over an effective sample of length T, centered at
// focal index s (1-based). The raw kernel is
//   w_t = (1/sqrt(2*pi)) * exp(-0.5*((s - t)/sd)^2),  sd = scale * W,
// and the returned weights are rho_t = ess * w_t / sum(w), with
// ess = (sum w)^2 / (sum w^2), so that sum(rho) equals the kernel's
// effective observation count.
KernelWeights compute_kernel_weights(int T, int s, double W, double scale);

}  // namespace dynnet
