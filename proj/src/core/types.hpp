#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

namespace dynnet {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using CMatrix = Eigen::MatrixXcd;

// T x N observation panel with opaque, strictly ordered time labels.
struct TimeSeriesPanel {
  Matrix values;                         // T x N
  std::vector<std::string> time_labels;  // length T
  std::vector<std::string> series_names; // length N

  std::int64_t rows() const { return values.rows(); }
  std::int64_t cols() const { return values.cols(); }
};

// One frequency band on the H-point Fourier grid. omega bounds live in
// [0, pi]; fourier_indices are the grid indices j in 0..H-1 whose folded
// frequency min(w_j, 2*pi - w_j) falls inside (omega_low, omega_high],
// with j = 0 assigned to the band whose lower edge is 0.
struct FrequencyBand {
  std::string name;
  double omega_low = 0.0;
  double omega_high = 0.0;
  std::vector<int> fourier_indices;
};

struct BandPartition {
  std::vector<FrequencyBand> bands;
  int grid_size = 0;  // H
};

// Band request before grid resolution: either a period range [p_lo, p_hi]
// in observations (p_hi may be infinite) or an angular-frequency interval.
struct BandSpec {
  std::string name;
  bool by_period = false;
  double period_lo = 0.0;
  double period_hi = 0.0;  // +inf allowed
  double omega_low = 0.0;
  double omega_high = 0.0;
};

struct RunConfig {
  int lag_order = 2;            // p
  int truncation = 100;         // H
  double bandwidth = 8.0;       // W
  double bandwidth_scale = 2.5; // effective kernel sd = bandwidth_scale * W
  int n_draws = 500;            // R
  double shrinkage = 0.05;      // phi
  double first_lag_prior_mean = 0.1;
  std::vector<BandSpec> bands;  // empty => transitory 1-5 / persistent 5-inf
  std::uint64_t seed = 0;
  int workers = 0;              // 0 => library default
  std::vector<int> time_grid;   // 1-based focal times; empty => all feasible
};

struct KernelWeights {
  Vector rho;      // length = effective sample size (T - p)
  double ess = 0;  // sum(rho)
  double bandwidth = 0;
};

struct PriorSpec {
  Matrix phi0;    // k x N prior mean, k = 1 + N*p
  Matrix xi0;     // k x k prior precision scale
  double alpha0 = 0;
  Matrix gamma0;  // N x N
};

struct PosteriorParams {
  Matrix phi_tilde;  // k x N
  Matrix xi_tilde;   // k x k
  double alpha_tilde = 0;
  Matrix gamma_tilde;  // N x N
  int focal_time = 0;
};

struct PosteriorDraw {
  Matrix coef;                 // k x N stacked [intercept; lag blocks]
  std::vector<Matrix> phi;     // p matrices, N x N, [Phi_g]_{i,j} = coef(1+(g-1)N+j, i)
  Vector intercept;            // N
  Matrix sigma;                // N x N
  bool stable = false;
};

struct VmaSpectrum {
  std::vector<Matrix> psi;        // H real N x N matrices
  std::vector<CMatrix> response;  // H complex N x N matrices
};

struct BandAdjacency {
  Matrix theta;  // N x N, row-normalized by the full-spectrum row sums
  int band_index = 0;
};

struct ConnectednessSet {
  double total = 0;
  Vector from_degree;
  Vector to_degree;
  Vector net;
  Matrix pairwise;  // antisymmetric net pairwise links
};

struct PosteriorSummary {
  double median = 0;
  double q025 = 0;
  double q975 = 0;
};

}  // namespace dynnet
