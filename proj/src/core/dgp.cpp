#include "core/dgp.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <iostream>
#include <numbers>
#include <random>

#include "core/connectedness.hpp"
#include "core/errors.hpp"
#include "core/rng.hpp"
#include "core/spectral.hpp"
#include "core/stability.hpp"

namespace dynnet {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kBurnIn = 50;

struct DgpConstants {
  double ar_sin_freq = 0;   // multiplies pi * t inside the AR sin terms
  double a21_sin_freq = 0;  // multiplies pi * t inside the impact sin term
  bool break_design = false;  // small/large own-lag amplitudes around t = 500
};

DgpConstants constants_for(DgpId id) {
  switch (id) {
    case DgpId::kI:
    case DgpId::kIT:
      return {0.002, 0.002, true};
    case DgpId::kII:
    case DgpId::kIII:
      return {0.004, 0.008, false};
    case DgpId::kIV:
      return {0.006, 0.008, false};
  }
  throw ConfigError("unknown generator id");
}

double draw_normal(RngEngine& rng, std::normal_distribution<double>& dist) {
  return dist(rng);
}

}  // namespace

DgpId parse_dgp_id(const std::string& text) {
  std::string t;
  for (char c : text) t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (t == "i" || t == "1") return DgpId::kI;
  if (t == "ii" || t == "2") return DgpId::kII;
  if (t == "iii" || t == "3") return DgpId::kIII;
  if (t == "iv" || t == "4") return DgpId::kIV;
  if (t == "i-t" || t == "it" || t == "1t" || t == "1-t") return DgpId::kIT;
  throw ConfigError("unknown generator id '" + text + "' (expected I, II, III, IV or I-t)");
}

std::string dgp_id_name(DgpId id) {
  switch (id) {
    case DgpId::kI: return "I";
    case DgpId::kII: return "II";
    case DgpId::kIII: return "III";
    case DgpId::kIV: return "IV";
    case DgpId::kIT: return "I-t";
  }
  return "?";
}

ErrorFamily default_error_family(DgpId id) {
  return (id == DgpId::kIII || id == DgpId::kIT) ? ErrorFamily::kStudentT5
                                                 : ErrorFamily::kGaussian;
}

LogVolParams logvol_params(bool zero_mean) {
  LogVolParams lv;
  lv.innovation_mean = zero_mean ? 0.0 : lv.mu;
  lv.innovation_sd = std::sqrt(0.1 * 0.1 / (1.0 - lv.lambda));
  return lv;
}

DgpPath simulate_dgp(const DgpConfig& config) {
  if (config.length < 10) throw ConfigError("simulation length must be at least 10");
  if (config.noise_scale < 0) throw ConfigError("noise scale must be nonnegative");
  const DgpConstants cc = constants_for(config.id);
  const bool student_t = config.id == DgpId::kIII || config.id == DgpId::kIT ||
                         config.errors == ErrorFamily::kStudentT5;
  const int T = config.length;
  const int total = kBurnIn + T;
  const double kappa_sd = (cc.break_design ? 1e-4 : 5e-4) * config.noise_scale;
  const double nu_sd = (cc.break_design ? 1e-3 : 0.1) * config.noise_scale;
  const double upsilon_sd = 0.3 * config.noise_scale;
  const LogVolParams lv = logvol_params(config.zero_mean_logvol);
  const double xi_sd = lv.innovation_sd * config.noise_scale;

  for (int attempt = 0; attempt < 100; ++attempt) {
    RngEngine rng(derive_seed(config.seed, static_cast<std::uint64_t>(config.sim_index),
                              static_cast<std::uint64_t>(attempt)));

    // Normalized random walks driving the parameter paths. Draw order is
    // fixed: lag-matrix innovations by (t, lag, row, col), then intercepts by
    // (t, equation), then the impact-coefficient walk by t.
    std::vector<Matrix> walk_lag(2, Matrix::Zero(2, 2));
    std::vector<Matrix> K1(T), K2(T);
    {
      std::normal_distribution<double> dist(0.0, kappa_sd > 0 ? kappa_sd : 1.0);
      for (int t = 0; t < T; ++t) {
        const double norm = std::sqrt(static_cast<double>(t + 1));
        for (int lag = 0; lag < 2; ++lag)
          for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
              walk_lag[lag](i, j) += kappa_sd > 0 ? draw_normal(rng, dist) : 0.0;
        K1[t] = walk_lag[0] / norm;
        K2[t] = walk_lag[1] / norm;
      }
    }
    std::vector<Vector> Nu(T);
    {
      Vector walk = Vector::Zero(2);
      std::normal_distribution<double> dist(0.0, nu_sd > 0 ? nu_sd : 1.0);
      for (int t = 0; t < T; ++t) {
        for (int j = 0; j < 2; ++j) walk(j) += nu_sd > 0 ? draw_normal(rng, dist) : 0.0;
        Nu[t] = walk / std::sqrt(static_cast<double>(t + 1));
      }
    }
    std::vector<double> U(T);
    {
      double walk = 0;
      std::normal_distribution<double> dist(0.0, upsilon_sd > 0 ? upsilon_sd : 1.0);
      for (int t = 0; t < T; ++t) {
        walk += upsilon_sd > 0 ? draw_normal(rng, dist) : 0.0;
        U[t] = walk / std::sqrt(static_cast<double>(t + 1));
      }
    }

    DgpPath path;
    path.true_phi0.resize(T);
    path.true_phi1.resize(T);
    path.true_phi2.resize(T);
    path.true_sigma.resize(T);
    std::vector<double> a21(T);
    bool explosive = false;
    for (int i = 0; i < T; ++i) {
      const double tt = i + 1;
      if (cc.break_design) {
        const double s = std::sin(cc.ar_sin_freq * kPi * tt);
        Matrix amp = Matrix::Constant(2, 2, 0.05);
        if (tt > 500) amp(0, 0) = amp(1, 1) = 0.45;
        path.true_phi1[i] = amp * s + 0.75 * K1[i];
        path.true_phi2[i] = amp * s + 0.75 * K2[i];
        const double aa = tt <= 500 ? 0.03 : 1.5;
        a21[i] = aa * std::sin(cc.a21_sin_freq * kPi * tt) + 0.7 * U[i];
        path.true_phi0[i] =
            Vector::Constant(2, 0.0025 * std::sin(0.004 * kPi * tt)) + 0.15 * Nu[i];
      } else {
        const double s = 0.25 * std::sin(cc.ar_sin_freq * kPi * tt);
        path.true_phi1[i] = Matrix::Constant(2, 2, s) + 0.75 * K1[i];
        path.true_phi2[i] = Matrix::Constant(2, 2, s) + 0.75 * K2[i];
        a21[i] = 0.3 * std::sin(cc.a21_sin_freq * kPi * tt) + 0.7 * U[i];
        path.true_phi0[i] =
            Vector::Constant(2, 0.25 * std::sin(0.004 * kPi * tt)) + 0.15 * Nu[i];
      }
      if (companion_spectral_radius({path.true_phi1[i], path.true_phi2[i]}) >= 1.0 - 1e-8) {
        explosive = true;
        break;
      }
    }
    if (explosive) continue;

    // Stochastic log-volatility, evolving through the burn-in from its
    // stationary mean.
    Matrix logh(total, 2);
    {
      std::normal_distribution<double> dist(lv.innovation_mean, xi_sd > 0 ? xi_sd : 1.0);
      Vector prev = Vector::Constant(2, lv.mu + lv.innovation_mean / (1.0 - lv.lambda));
      for (int i = 0; i < total; ++i) {
        for (int j = 0; j < 2; ++j) {
          const double xi = xi_sd > 0 ? draw_normal(rng, dist) : lv.innovation_mean;
          logh(i, j) = lv.mu + lv.lambda * (prev(j) - lv.mu) + xi;
        }
        prev = logh.row(i).transpose();
      }
    }

    Matrix eta(total, 2);
    {
      std::normal_distribution<double> dist(0.0, 1.0);
      for (int i = 0; i < total; ++i)
        for (int j = 0; j < 2; ++j) eta(i, j) = dist(rng);
    }
    if (student_t) {
      std::gamma_distribution<double> chi2_5(2.5, 2.0);
      for (int i = 0; i < total; ++i) {
        const double g = chi2_5(rng);
        eta.row(i) /= std::sqrt(g / 5.0);
      }
    }

    // Burn-in uses the first-period coefficients; the first lagged states are
    // zero.
    Matrix X = Matrix::Zero(total, 2);
    for (int i = 0; i < total; ++i) {
      const int ti = std::max(i - kBurnIn, 0);
      Matrix a_inv(2, 2);
      a_inv << 1.0, 0.0, -a21[ti], 1.0;
      const Vector hv = logh.row(i).transpose().array().exp();
      const Vector eps = a_inv * (hv.array().sqrt() * eta.row(i).transpose().array()).matrix();
      Vector x1 = Vector::Zero(2);
      Vector x2 = Vector::Zero(2);
      if (i >= 1) x1 = X.row(i - 1).transpose();
      if (i >= 2) x2 = X.row(i - 2).transpose();
      X.row(i) = (path.true_phi0[ti] + path.true_phi1[ti] * x1 + path.true_phi2[ti] * x2 + eps)
                     .transpose();
      if (i >= kBurnIn)
        path.true_sigma[i - kBurnIn] = a_inv * hv.asDiagonal() * a_inv.transpose();
    }
    path.panel.values = X.bottomRows(T);
    path.panel.time_labels.resize(T);
    for (int t = 0; t < T; ++t) path.panel.time_labels[t] = std::to_string(t + 1);
    path.panel.series_names = {"x1", "x2"};
    path.regenerations = attempt;
    return path;
  }
  throw NumericError("simulated parameter paths stayed explosive after 100 regenerations");
}

TrueConnectednessPaths true_connectedness(const DgpPath& path, const BandPartition& bands,
                                          int truncation) {
  std::vector<int> all(path.true_phi1.size());
  for (std::size_t t = 0; t < all.size(); ++t) all[t] = static_cast<int>(t) + 1;
  return true_connectedness(path, bands, truncation, all);
}

TrueConnectednessPaths true_connectedness(const DgpPath& path, const BandPartition& bands,
                                          int truncation, const std::vector<int>& times) {
  const int T = static_cast<int>(path.true_phi1.size());
  TrueConnectednessPaths out;
  out.times = times;
  const int n = static_cast<int>(times.size());
  out.stable.assign(n, 1);
  out.sets.assign(bands.bands.size(), std::vector<ConnectednessSet>(n));
  for (int i = 0; i < n; ++i) {
    const int t = times[i];
    if (t < 1 || t > T)
      throw ConfigError("true-path time " + std::to_string(t) + " outside 1.." +
                        std::to_string(T));
    std::vector<Matrix> phi = {path.true_phi1[t - 1], path.true_phi2[t - 1]};
    if (!check_stability(phi)) {
      out.stable[i] = 0;
      ++out.masked;
      continue;
    }
    const VmaSpectrum spec = compute_vma_spectrum(phi, truncation);
    const auto adj = compute_band_adjacency(spec, path.true_sigma[t - 1], bands);
    for (std::size_t b = 0; b < adj.size(); ++b)
      out.sets[b][i] = compute_connectedness(adj[b].theta);
  }
  if (out.masked * 5 > n && n > 0)
    std::cerr << "warning: " << out.masked << " of " << n
              << " time points masked as unstable in true-path connectedness\n";
  return out;
}

}  // namespace dynnet
