#pragma once

#include <string>
#include <vector>

#include "core/dgp.hpp"
#include "core/types.hpp"

namespace dynnet {

struct StudyOptions {
  int n_sims = 1;
  std::vector<int> table_times;     // 1-based u for the probability table
  std::vector<int> tracking_times;  // grid for fitted-vs-true band tracking
};

struct StudyTableRow {
  int u = 0;
  double fitted = 0;      // mean over simulations of per-sim Pr(low > high)
  double true_fraction = 0;  // share of simulations whose true low > high at u
  std::vector<double> per_sim_fitted;
};

struct StudyTrackingBand {
  std::string name;
  std::vector<double> true_median;  // across-sim median of per-sim true totals
  std::vector<double> median;       // pooled posterior median
  std::vector<double> q025;         // pooled posterior band
  std::vector<double> q975;
  double coverage = 0;  // share of grid points with true_median inside the band
};

struct StudyReport {
  std::string dgp;
  int n_sims = 0;
  std::vector<std::string> band_names;
  std::vector<StudyTableRow> table;
  std::vector<int> tracking_times;
  std::vector<StudyTrackingBand> tracking;
  long long regenerations = 0;
  long long unstable_draws = 0;
};

// Frequency split used by every study: "low" covers (0, pi/5], "high"
// covers (pi/5, pi].
BandPartition study_band_partition(int truncation);

// Simulates n_sims independent panels from the generator, fits the
// kernel-weighted posterior at each requested time, and aggregates the
// per-draw band comparisons into the probability table and the
// fitted-vs-true tracking bands (pooling draws across simulations).
StudyReport run_mc_study(const DgpConfig& dgp, const RunConfig& run,
                         const StudyOptions& options);

}  // namespace dynnet
