#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/types.hpp"

namespace dynnet {

enum class DgpId { kI, kII, kIII, kIV, kIT };
enum class ErrorFamily { kGaussian, kStudentT5 };

DgpId parse_dgp_id(const std::string& text);
std::string dgp_id_name(DgpId id);

// Heavy-tailed designs carry student-t innovations by construction.
ErrorFamily default_error_family(DgpId id);

struct DgpConfig {
  DgpId id = DgpId::kII;
  int length = 1000;  // post-burn-in observations
  std::uint64_t seed = 0;
  int sim_index = 0;  // substream selector for repeated simulations
  ErrorFamily errors = ErrorFamily::kGaussian;  // forced to t5 for kIII / kIT
  bool zero_mean_logvol = false;  // zero-mean log-volatility shocks instead of drift
  double noise_scale = 1.0;  // scales all parameter/volatility innovation sds
};

struct DgpPath {
  TimeSeriesPanel panel;           // T x 2
  std::vector<Vector> true_phi0;   // per-t intercepts
  std::vector<Matrix> true_phi1;   // per-t first-lag matrices
  std::vector<Matrix> true_phi2;   // per-t second-lag matrices
  std::vector<Matrix> true_sigma;  // per-t innovation covariance, SPD
  int regenerations = 0;           // explosive attempts discarded before success
};

struct LogVolParams {
  double mu = 0.01;      // recursion level
  double lambda = 0.95;  // persistence
  double innovation_mean = 0.01;
  double innovation_sd = 0;  // sqrt(0.1^2 / (1 - lambda))
};
LogVolParams logvol_params(bool zero_mean);

// Simulates one bivariate VAR(2) path with drifting coefficients, stochastic
// log-volatility and a drifting impact coefficient. Parameter paths whose
// companion radius reaches 1 - 1e-8 anywhere are discarded and regenerated
// with a fresh substream; 100 consecutive rejections raise NumericError.
// The recursion starts from zero states, runs a 50-observation burn-in with
// coefficients frozen at their first-period values (volatility evolving), and
// discards the burn-in.
DgpPath simulate_dgp(const DgpConfig& config);

struct TrueConnectednessPaths {
  std::vector<int> times;  // 1-based time points covered, ascending
  std::vector<char> stable;
  // sets[band][i] aligned with times; entries with stable[i] == 0 are masked
  std::vector<std::vector<ConnectednessSet>> sets;
  int masked = 0;
};

// Band connectedness implied by the true parameter paths, bypassing
// estimation. Unstable time points are masked; a masked fraction above 20%
// prints a quality warning to stderr. The two-argument form covers every
// time point; the subset form evaluates only the requested 1-based times.
TrueConnectednessPaths true_connectedness(const DgpPath& path, const BandPartition& bands,
                                          int truncation);
TrueConnectednessPaths true_connectedness(const DgpPath& path, const BandPartition& bands,
                                          int truncation, const std::vector<int>& times);

}  // namespace dynnet
