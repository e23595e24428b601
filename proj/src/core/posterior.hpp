#pragma once

#include <cstdint>

#include "core/types.hpp"

namespace dynnet {

// Cholesky with a symmetrize-then-jitter-once fallback (adds 1e-10 * mean
// diagonal) before raising a conditioning error naming the smallest
// eigenvalue. Returns the lower factor L with M = L * L'.
Matrix robust_cholesky(const Matrix& m, const char* what);

// Conjugate Normal-Wishart update at focal time s (1-based calendar index,
// s > p). The design row for calendar time t is (1, x'_{t-1}, ..., x'_{t-p});
// the effective sample covers t = p+1..T, and the kernel weights are indexed
// on that effective sample (focal weight index s - p).
PosteriorParams compute_posterior(const TimeSeriesPanel& panel, int s,
                                  const PriorSpec& prior, const KernelWeights& weights,
                                  int p);

// One draw from the Normal-Wishart quasi-posterior: precision ~ Wishart
// (alpha_tilde, Gamma_tilde^{-1}) via the Bartlett factorization, inverted to
// Sigma; coefficients matrix-normal around phi_tilde with covariance
// Sigma (x) Xi_tilde^{-1}. Stability is evaluated against the companion
// spectral radius; unstable draws are redrawn up to 50 times, after which the
// draw is returned with stable = false.
PosteriorDraw sample_posterior_draw(const PosteriorParams& params, int N, int p,
                                    std::uint64_t seed);

struct PosteriorSampler {
  // Precomputed factorizations shared across draws at one focal time.
  Matrix chol_xi;         // lower, Xi_tilde = L L'
  Matrix chol_gamma_inv;  // lower, Gamma_tilde^{-1} = L L'
  Matrix phi_tilde;
  double alpha_tilde = 0;
  int N = 0;
  int p = 0;

  explicit PosteriorSampler(const PosteriorParams& params, int N, int p);
  PosteriorDraw draw(std::uint64_t seed) const;
};

}  // namespace dynnet
