#include "core/mc_study.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <numbers>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "core/bands.hpp"
#include "core/connectedness.hpp"
#include "core/errors.hpp"
#include "core/estimator.hpp"
#include "core/prior.hpp"
#include "core/rng.hpp"

namespace dynnet {

BandPartition study_band_partition(int truncation) {
  std::vector<BandSpec> specs(2);
  specs[0].name = "low";
  specs[0].omega_low = 0.0;
  specs[0].omega_high = std::numbers::pi / 5.0;
  specs[1].name = "high";
  specs[1].omega_low = std::numbers::pi / 5.0;
  specs[1].omega_high = std::numbers::pi;
  return build_band_partition(specs, truncation);
}

namespace {

// Everything one simulation contributes, stored per sim for deterministic
// aggregation regardless of thread schedule.
struct SimContribution {
  // totals[time][band][draw]
  std::vector<std::vector<std::vector<double>>> totals;
  // true_totals[time][band]; stable flag alongside
  std::vector<std::vector<double>> true_totals;
  std::vector<char> true_stable;
  int regenerations = 0;
  int unstable_draws = 0;
};

}  // namespace

StudyReport run_mc_study(const DgpConfig& dgp, const RunConfig& run,
                         const StudyOptions& options) {
  if (options.n_sims < 1) throw ConfigError("study needs at least one simulation");
  if (run.n_draws < 1) throw ConfigError("draw count must be positive");
  for (int u : options.table_times)
    if (u <= run.lag_order || u > dgp.length)
      throw ConfigError("table time " + std::to_string(u) + " outside valid range");
  for (int u : options.tracking_times)
    if (u <= run.lag_order || u > dgp.length)
      throw ConfigError("tracking time " + std::to_string(u) + " outside valid range");
  if (options.table_times.empty() && options.tracking_times.empty())
    throw ConfigError("study needs table times or tracking times");

  const BandPartition partition = study_band_partition(run.truncation);
  const int n_bands = static_cast<int>(partition.bands.size());

  // Union grid of times each simulation is fitted at.
  std::set<int> time_set(options.table_times.begin(), options.table_times.end());
  time_set.insert(options.tracking_times.begin(), options.tracking_times.end());
  const std::vector<int> times(time_set.begin(), time_set.end());
  const int n_times = static_cast<int>(times.size());
  auto time_index = [&](int u) {
    return static_cast<int>(std::lower_bound(times.begin(), times.end(), u) - times.begin());
  };

#ifdef _OPENMP
  if (run.workers > 0) omp_set_num_threads(run.workers);
#endif

  std::vector<SimContribution> sims(options.n_sims);
  std::atomic<bool> failed{false};
  std::exception_ptr failure = nullptr;
#pragma omp parallel for schedule(dynamic)
  for (int sim = 0; sim < options.n_sims; ++sim) {
    if (failed.load(std::memory_order_relaxed)) continue;
    try {
      DgpConfig cfg = dgp;
      cfg.sim_index = sim;
      const DgpPath path = simulate_dgp(cfg);
      SimContribution& contrib = sims[sim];
      contrib.regenerations = path.regenerations;

      const PriorSpec prior = build_minnesota_prior(path.panel, run);
      contrib.totals.resize(n_times);
      for (int ti = 0; ti < n_times; ++ti) {
        const int u = times[ti];
        const std::uint64_t seed_draw =
            derive_seed(run.seed, 0x6d637564ULL, static_cast<std::uint64_t>(sim),
                        static_cast<std::uint64_t>(u));
        TimeDraws draws = draw_connectedness(path.panel, run, partition, prior, u, seed_draw);
        contrib.unstable_draws += draws.unstable;
        contrib.totals[ti].resize(n_bands);
        for (int b = 0; b < n_bands; ++b) {
          auto& dst = contrib.totals[ti][b];
          dst.reserve(draws.sets[b].size());
          for (const auto& set : draws.sets[b]) dst.push_back(set.total);
        }
        if (contrib.totals[ti][0].empty())
          throw NumericError("no stable posterior draws at time " + std::to_string(u) +
                             " in simulation " + std::to_string(sim));
      }

      const TrueConnectednessPaths truth =
          true_connectedness(path, partition, run.truncation, times);
      contrib.true_totals.assign(n_times, std::vector<double>(n_bands, 0.0));
      contrib.true_stable.assign(n_times, 1);
      for (int ti = 0; ti < n_times; ++ti) {
        contrib.true_stable[ti] = truth.stable[ti];
        for (int b = 0; b < n_bands; ++b)
          contrib.true_totals[ti][b] = truth.sets[b][ti].total;
      }
    } catch (...) {
#pragma omp critical
      {
        if (!failure) failure = std::current_exception();
        failed.store(true, std::memory_order_relaxed);
      }
    }
  }
  if (failure) std::rethrow_exception(failure);

  StudyReport report;
  report.dgp = dgp_id_name(dgp.id);
  report.n_sims = options.n_sims;
  for (const auto& band : partition.bands) report.band_names.push_back(band.name);
  for (const auto& contrib : sims) {
    report.regenerations += contrib.regenerations;
    report.unstable_draws += contrib.unstable_draws;
  }

  // Probability table: per-sim share of draws with low above high, averaged
  // across simulations; the true column compares the known parameter paths.
  for (int u : options.table_times) {
    const int ti = time_index(u);
    StudyTableRow row;
    row.u = u;
    int true_count = 0;
    int true_valid = 0;
    for (const auto& contrib : sims) {
      const auto& low = contrib.totals[ti][0];
      const auto& high = contrib.totals[ti][1];
      std::size_t above = 0;
      for (std::size_t r = 0; r < low.size(); ++r)
        if (low[r] > high[r]) ++above;
      row.per_sim_fitted.push_back(static_cast<double>(above) /
                                   static_cast<double>(low.size()));
      if (contrib.true_stable[ti]) {
        ++true_valid;
        if (contrib.true_totals[ti][0] > contrib.true_totals[ti][1]) ++true_count;
      }
    }
    double sum = 0;
    for (double f : row.per_sim_fitted) sum += f;
    row.fitted = sum / static_cast<double>(row.per_sim_fitted.size());
    row.true_fraction =
        true_valid > 0 ? static_cast<double>(true_count) / true_valid : 0.0;
    report.table.push_back(std::move(row));
  }

  // Tracking bands: pool draws across simulations per time point; the true
  // line is the across-sim median of per-sim true totals.
  report.tracking_times = options.tracking_times;
  if (!options.tracking_times.empty()) {
    for (int b = 0; b < n_bands; ++b) {
      StudyTrackingBand band;
      band.name = partition.bands[b].name;
      int covered = 0;
      for (int u : options.tracking_times) {
        const int ti = time_index(u);
        std::vector<double> pooled;
        std::vector<double> truths;
        for (const auto& contrib : sims) {
          pooled.insert(pooled.end(), contrib.totals[ti][b].begin(),
                        contrib.totals[ti][b].end());
          if (contrib.true_stable[ti]) truths.push_back(contrib.true_totals[ti][b]);
        }
        if (truths.empty())
          throw NumericError("true path unstable across all simulations at time " +
                             std::to_string(u));
        const double truth = quantile_type7(truths, 0.5);
        const double lo = quantile_type7(pooled, 0.025);
        const double hi = quantile_type7(pooled, 0.975);
        band.true_median.push_back(truth);
        band.median.push_back(quantile_type7(pooled, 0.5));
        band.q025.push_back(lo);
        band.q975.push_back(hi);
        if (truth >= lo && truth <= hi) ++covered;
      }
      band.coverage =
          static_cast<double>(covered) / static_cast<double>(options.tracking_times.size());
      report.tracking.push_back(std::move(band));
    }
  }
  return report;
}

}  // namespace dynnet
