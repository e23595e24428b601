#include "core/estimator.hpp"

#include <atomic>
#include <exception>
#include <iostream>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "core/bands.hpp"
#include "core/connectedness.hpp"
#include "core/errors.hpp"
#include "core/kernel.hpp"
#include "core/posterior.hpp"
#include "core/prior.hpp"
#include "core/rng.hpp"
#include "core/spectral.hpp"

namespace dynnet {

BandPartition resolve_bands(const RunConfig& config) {
  const auto specs = config.bands.empty() ? default_band_specs() : config.bands;
  return build_band_partition(specs, config.truncation);
}

TimeDraws draw_connectedness(const TimeSeriesPanel& panel, const RunConfig& config,
                             const BandPartition& partition, const PriorSpec& prior,
                             int s, std::uint64_t draw_seed) {
  const int T = static_cast<int>(panel.rows());
  const int N = static_cast<int>(panel.cols());
  const int p = config.lag_order;
  const KernelWeights weights =
      compute_kernel_weights(T - p, s - p, config.bandwidth, config.bandwidth_scale);
  const PosteriorParams post = compute_posterior(panel, s, prior, weights, p);
  const PosteriorSampler sampler(post, N, p);

  TimeDraws out;
  out.sets.assign(partition.bands.size(), {});
  for (auto& v : out.sets) v.reserve(config.n_draws);
  for (int r = 0; r < config.n_draws; ++r) {
    const PosteriorDraw draw = sampler.draw(derive_seed(draw_seed, static_cast<std::uint64_t>(r)));
    if (!draw.stable) {
      ++out.unstable;
      continue;
    }
    const VmaSpectrum spectrum = compute_vma_spectrum(draw.phi, config.truncation);
    const auto adjacency = compute_band_adjacency(spectrum, draw.sigma, partition);
    for (std::size_t b = 0; b < adjacency.size(); ++b)
      out.sets[b].push_back(compute_connectedness(adjacency[b].theta));
  }
  return out;
}

namespace {

BandMeasures summarize_band(const std::vector<ConnectednessSet>& sets, int N) {
  BandMeasures m;
  const std::size_t R = sets.size();
  std::vector<double> buf(R);
  auto fill = [&](auto&& get) {
    for (std::size_t r = 0; r < R; ++r) buf[r] = get(sets[r]);
    return summarize_draws(buf);
  };
  m.total = fill([](const ConnectednessSet& c) { return c.total; });
  m.from.resize(N);
  m.to.resize(N);
  m.net.resize(N);
  m.pairwise.assign(N, std::vector<PosteriorSummary>(N));
  for (int i = 0; i < N; ++i) {
    m.from[i] = fill([i](const ConnectednessSet& c) { return c.from_degree(i); });
    m.to[i] = fill([i](const ConnectednessSet& c) { return c.to_degree(i); });
    m.net[i] = fill([i](const ConnectednessSet& c) { return c.net(i); });
    for (int j = 0; j < N; ++j) {
      if (i == j) continue;
      m.pairwise[i][j] = fill([i, j](const ConnectednessSet& c) { return c.pairwise(i, j); });
    }
  }
  return m;
}

}  // namespace

EstimationResult run_estimation(const TimeSeriesPanel& panel, const RunConfig& config) {
  const int T = static_cast<int>(panel.rows());
  const int N = static_cast<int>(panel.cols());
  const int p = config.lag_order;
  if (p < 1) throw ConfigError("lag order must be at least 1");
  if (config.n_draws < 1) throw ConfigError("draw count must be positive");
  if (T <= p + 1) throw ConfigError("panel too short for lag order " + std::to_string(p));

  EstimationResult result;
  result.partition = resolve_bands(config);
  result.node_names = panel.series_names;
  if (result.partition.bands.size() >= 2 && config.n_draws < 20)
    throw ConfigError("band-pair tests need at least 20 draws, got " +
                      std::to_string(config.n_draws));

  std::vector<int> grid = config.time_grid;
  if (grid.empty()) {
    grid.reserve(T - p);
    for (int s = p + 1; s <= T; ++s) grid.push_back(s);
  }
  for (int s : grid)
    if (s <= p || s > T)
      throw ConfigError("focal time " + std::to_string(s) + " outside valid range (" +
                        std::to_string(p) + ", " + std::to_string(T) + "]");

  const PriorSpec prior = build_minnesota_prior(panel, config);
  result.points.resize(grid.size());

#ifdef _OPENMP
  if (config.workers > 0) omp_set_num_threads(config.workers);
#endif

  std::atomic<bool> failed{false};
  std::exception_ptr failure = nullptr;
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t gi = 0; gi < static_cast<std::int64_t>(grid.size()); ++gi) {
    if (failed.load(std::memory_order_relaxed)) continue;
    try {
      const int s = grid[gi];
      TimePointEstimate point;
      point.s = s;
      point.time_label = panel.time_labels[s - 1];
      const std::uint64_t seed_s =
          derive_seed(config.seed, 0x657374ULL, static_cast<std::uint64_t>(s));  // "est"
      TimeDraws draws = draw_connectedness(panel, config, result.partition, prior, s, seed_s);
      point.unstable_draws = draws.unstable;

      const int stable = static_cast<int>(draws.sets.empty() ? 0 : draws.sets[0].size());
      if (stable < 1)
        throw NumericError("no stable posterior draws at time " + std::to_string(s));
      point.bands.reserve(draws.sets.size());
      for (const auto& sets : draws.sets) point.bands.push_back(summarize_band(sets, N));

      if (draws.sets.size() >= 2) {
        if (stable < 20)
          throw NumericError("only " + std::to_string(stable) +
                             " stable draws at time " + std::to_string(s) +
                             "; band-pair tests need 20");
        std::vector<std::vector<double>> totals(draws.sets.size(), std::vector<double>(stable));
        for (std::size_t b = 0; b < draws.sets.size(); ++b)
          for (int r = 0; r < stable; ++r) totals[b][r] = draws.sets[b][r].total;
        int pair_index = 0;
        for (std::size_t a = 0; a < draws.sets.size(); ++a) {
          for (std::size_t b = a + 1; b < draws.sets.size(); ++b, ++pair_index) {
            PairTest test;
            test.band_a = static_cast<int>(a);
            test.band_b = static_cast<int>(b);
            test.wald = wald_equality_test(
                totals[a], totals[b],
                derive_seed(config.seed, 0x74657374ULL, static_cast<std::uint64_t>(s),
                            static_cast<std::uint64_t>(pair_index)));  // "test"
            test.prob_a_gt_b = band_probability(totals[a], totals[b]);
            point.tests.push_back(std::move(test));
          }
        }
      }
      result.points[gi] = std::move(point);
    } catch (...) {
#pragma omp critical
      {
        if (!failure) failure = std::current_exception();
        failed.store(true, std::memory_order_relaxed);
      }
    }
  }
  if (failure) std::rethrow_exception(failure);

  for (const auto& point : result.points) result.unstable_draws += point.unstable_draws;
  if (result.unstable_draws > 0)
    std::cerr << "note: " << result.unstable_draws
              << " posterior draws discarded as unstable across the run\n";
  return result;
}

}  // namespace dynnet
