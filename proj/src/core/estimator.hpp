#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/inference.hpp"
#include "core/types.hpp"

namespace dynnet {

// Per-draw connectedness sets at one focal time, one inner vector per band,
// stable draws only.
struct TimeDraws {
  std::vector<std::vector<ConnectednessSet>> sets;  // [band][draw]
  int unstable = 0;
};

// Posterior summaries of every network measure for one band at one time.
struct BandMeasures {
  PosteriorSummary total;
  std::vector<PosteriorSummary> from;  // per node
  std::vector<PosteriorSummary> to;
  std::vector<PosteriorSummary> net;
  std::vector<std::vector<PosteriorSummary>> pairwise;  // N x N, diagonal zero
};

struct PairTest {
  int band_a = 0;
  int band_b = 0;
  WaldResult wald;
  double prob_a_gt_b = 0;
};

struct TimePointEstimate {
  int s = 0;  // 1-based focal calendar time
  std::string time_label;
  std::vector<BandMeasures> bands;
  std::vector<PairTest> tests;  // one per unordered band pair
  int unstable_draws = 0;
};

struct EstimationResult {
  BandPartition partition;
  std::vector<std::string> node_names;
  std::vector<TimePointEstimate> points;
  long long unstable_draws = 0;
};

// Draws the quasi-posterior at focal time s (1-based) and maps each stable
// draw through the spectral decomposition into per-band connectedness sets.
TimeDraws draw_connectedness(const TimeSeriesPanel& panel, const RunConfig& config,
                             const BandPartition& partition, const PriorSpec& prior,
                             int s, std::uint64_t draw_seed);

// Full pipeline over config.time_grid (all feasible times when empty):
// kernel weights -> posterior -> draws -> band connectedness summaries and
// band-pair equality tests. Parallel across focal times; per-time seed
// substreams keep results independent of the schedule.
EstimationResult run_estimation(const TimeSeriesPanel& panel, const RunConfig& config);

// Resolves the configured band specs (default two-band split when empty)
// against the truncation grid.
BandPartition resolve_bands(const RunConfig& config);

}  // namespace dynnet
