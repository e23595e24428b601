#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "core/connectedness.hpp"
#include "core/dgp.hpp"
#include "core/errors.hpp"
#include "core/mc_study.hpp"
#include "core/spectral.hpp"
#include "core/stability.hpp"
#include "core/types.hpp"

using namespace dynnet;

namespace {

constexpr double kPi = std::numbers::pi;

DgpConfig base_config(DgpId id, int length, std::uint64_t seed) {
  DgpConfig config;
  config.id = id;
  config.length = length;
  config.seed = seed;
  config.errors = default_error_family(id);
  return config;
}

}  // namespace

TEST_CASE("generator ids parse and print") {
  CHECK(parse_dgp_id("I") == DgpId::kI);
  CHECK(parse_dgp_id("ii") == DgpId::kII);
  CHECK(parse_dgp_id("III") == DgpId::kIII);
  CHECK(parse_dgp_id("iv") == DgpId::kIV);
  CHECK(parse_dgp_id("I-t") == DgpId::kIT);
  CHECK(parse_dgp_id("it") == DgpId::kIT);
  CHECK(parse_dgp_id("1") == DgpId::kI);
  CHECK(parse_dgp_id("2") == DgpId::kII);
  CHECK(parse_dgp_id("3") == DgpId::kIII);
  CHECK(parse_dgp_id("4") == DgpId::kIV);
  CHECK(parse_dgp_id("1t") == DgpId::kIT);
  CHECK_THROWS_AS(parse_dgp_id("v"), ConfigError);
  CHECK_THROWS_AS(parse_dgp_id(""), ConfigError);

  CHECK(dgp_id_name(DgpId::kI) == "I");
  CHECK(dgp_id_name(DgpId::kII) == "II");
  CHECK(dgp_id_name(DgpId::kIII) == "III");
  CHECK(dgp_id_name(DgpId::kIV) == "IV");
  CHECK(dgp_id_name(DgpId::kIT) == "I-t");
  for (auto id : {DgpId::kI, DgpId::kII, DgpId::kIII, DgpId::kIV, DgpId::kIT})
    CHECK(parse_dgp_id(dgp_id_name(id)) == id);

  CHECK(default_error_family(DgpId::kI) == ErrorFamily::kGaussian);
  CHECK(default_error_family(DgpId::kII) == ErrorFamily::kGaussian);
  CHECK(default_error_family(DgpId::kIV) == ErrorFamily::kGaussian);
  CHECK(default_error_family(DgpId::kIII) == ErrorFamily::kStudentT5);
  CHECK(default_error_family(DgpId::kIT) == ErrorFamily::kStudentT5);
}

TEST_CASE("log-volatility parameters") {
  const auto lv = logvol_params(false);
  CHECK(lv.mu == 0.01);
  CHECK(lv.lambda == 0.95);
  CHECK(lv.innovation_mean == 0.01);
  CHECK(lv.innovation_sd == doctest::Approx(std::sqrt(0.2)).epsilon(1e-15));
  const auto zero = logvol_params(true);
  CHECK(zero.innovation_mean == 0.0);
  CHECK(zero.innovation_sd == lv.innovation_sd);
}

TEST_CASE("simulated path shapes and labels") {
  const auto path = simulate_dgp(base_config(DgpId::kII, 200, 11));
  CHECK(path.panel.rows() == 200);
  CHECK(path.panel.cols() == 2);
  CHECK(path.panel.series_names == std::vector<std::string>{"x1", "x2"});
  CHECK(path.panel.time_labels.front() == "1");
  CHECK(path.panel.time_labels.back() == "200");
  CHECK(path.true_phi0.size() == 200);
  CHECK(path.true_phi1.size() == 200);
  CHECK(path.true_phi2.size() == 200);
  CHECK(path.true_sigma.size() == 200);
  CHECK(path.panel.values.allFinite());
  for (const auto& sigma : path.true_sigma) {
    CHECK((sigma - sigma.transpose()).cwiseAbs().maxCoeff() < 1e-14);
    Eigen::LLT<Matrix> llt(sigma);
    CHECK(llt.info() == Eigen::Success);
  }
}

TEST_CASE("simulation is deterministic in seed and sim index") {
  const auto a = simulate_dgp(base_config(DgpId::kII, 150, 42));
  const auto b = simulate_dgp(base_config(DgpId::kII, 150, 42));
  CHECK((a.panel.values - b.panel.values).cwiseAbs().maxCoeff() == 0.0);
  CHECK(a.regenerations == b.regenerations);

  auto other_seed = base_config(DgpId::kII, 150, 43);
  const auto c = simulate_dgp(other_seed);
  CHECK((a.panel.values - c.panel.values).cwiseAbs().maxCoeff() > 0.0);

  auto other_sim = base_config(DgpId::kII, 150, 42);
  other_sim.sim_index = 1;
  const auto d = simulate_dgp(other_sim);
  CHECK((a.panel.values - d.panel.values).cwiseAbs().maxCoeff() > 0.0);
}

TEST_CASE("noise-free paths follow the deterministic parameter schedule") {
  auto config = base_config(DgpId::kII, 100, 5);
  config.noise_scale = 0.0;
  const auto path = simulate_dgp(config);
  CHECK(path.regenerations == 0);

  for (int t0 : {0, 24, 49, 99}) {
    const double tt = t0 + 1;
    const double s = 0.25 * std::sin(0.004 * kPi * tt);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        CHECK(path.true_phi1[t0](i, j) == doctest::Approx(s).epsilon(1e-14));
        CHECK(path.true_phi2[t0](i, j) == doctest::Approx(s).epsilon(1e-14));
      }
    const double mu = 0.25 * std::sin(0.004 * kPi * tt);
    CHECK(path.true_phi0[t0](0) == doctest::Approx(mu).epsilon(1e-14));
    CHECK(path.true_phi0[t0](1) == doctest::Approx(mu).epsilon(1e-14));

    // The volatility recursion stays at its stationary level exp(0.21) and
    // the impact coefficient follows its own sinusoid.
    const double h = std::exp(0.21);
    const double a21 = 0.3 * std::sin(0.008 * kPi * tt);
    CHECK(path.true_sigma[t0](0, 0) == doctest::Approx(h).epsilon(1e-12));
    CHECK(path.true_sigma[t0](0, 1) == doctest::Approx(-a21 * h).epsilon(1e-12));
    CHECK(path.true_sigma[t0](1, 1) == doctest::Approx((1 + a21 * a21) * h).epsilon(1e-12));
  }
}

TEST_CASE("zero-mean log-volatility moves the stationary variance level") {
  auto config = base_config(DgpId::kII, 60, 5);
  config.noise_scale = 0.0;
  config.zero_mean_logvol = true;
  const auto path = simulate_dgp(config);
  CHECK(path.true_sigma[30](0, 0) == doctest::Approx(std::exp(0.01)).epsilon(1e-12));
}

TEST_CASE("noise-free break design switches amplitude at the midpoint") {
  auto config = base_config(DgpId::kI, 1000, 9);
  config.noise_scale = 0.0;
  const auto path = simulate_dgp(config);

  // Before the break: small symmetric amplitudes.
  {
    const double tt = 100;
    const double s = std::sin(0.002 * kPi * tt);
    CHECK(path.true_phi1[99](0, 0) == doctest::Approx(0.05 * s).epsilon(1e-13));
    CHECK(path.true_phi1[99](0, 1) == doctest::Approx(0.05 * s).epsilon(1e-13));
    CHECK(path.true_phi0[99](0) ==
          doctest::Approx(0.0025 * std::sin(0.004 * kPi * tt)).epsilon(1e-13));
    const double a21 = 0.03 * std::sin(0.002 * kPi * tt);
    CHECK(path.true_sigma[99](0, 1) ==
          doctest::Approx(-a21 * std::exp(0.21)).epsilon(1e-12));
  }
  // After the break: large own-lag amplitude, small cross amplitude, strong
  // impact coefficient.
  {
    const double tt = 600;
    const double s = std::sin(0.002 * kPi * tt);
    CHECK(path.true_phi1[599](0, 0) == doctest::Approx(0.45 * s).epsilon(1e-13));
    CHECK(path.true_phi1[599](1, 1) == doctest::Approx(0.45 * s).epsilon(1e-13));
    CHECK(path.true_phi1[599](0, 1) == doctest::Approx(0.05 * s).epsilon(1e-13));
    const double a21 = 1.5 * std::sin(0.002 * kPi * tt);
    CHECK(path.true_sigma[599](0, 1) ==
          doctest::Approx(-a21 * std::exp(0.21)).epsilon(1e-12));
  }
}

TEST_CASE("heavy-tailed designs change the innovation stream") {
  const auto gauss = simulate_dgp(base_config(DgpId::kII, 150, 7));
  auto heavy_config = base_config(DgpId::kII, 150, 7);
  heavy_config.errors = ErrorFamily::kStudentT5;
  const auto heavy = simulate_dgp(heavy_config);
  CHECK((gauss.panel.values - heavy.panel.values).cwiseAbs().maxCoeff() > 0.0);

  // Designs III and I-t force the heavy-tailed family regardless of the
  // configured errors.
  auto forced = base_config(DgpId::kIII, 150, 7);
  forced.errors = ErrorFamily::kGaussian;
  const auto a = simulate_dgp(forced);
  forced.errors = ErrorFamily::kStudentT5;
  const auto b = simulate_dgp(forced);
  CHECK((a.panel.values - b.panel.values).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("explosive schedules are regenerated or rejected") {
  // Near t = 125 the noise-free coefficient peak touches the stability
  // boundary, so a noise-free run long enough to cross it must fail.
  auto doomed = base_config(DgpId::kII, 130, 1);
  doomed.noise_scale = 0.0;
  CHECK_THROWS_AS(simulate_dgp(doomed), NumericError);

  // With parameter noise the same window is a coin flip per attempt; across
  // seeds both regenerated and first-try paths appear.
  int with_regen = 0, without = 0;
  for (std::uint64_t seed = 0; seed < 21; ++seed) {
    const auto path = simulate_dgp(base_config(DgpId::kII, 130, seed));
    if (path.regenerations > 0)
      ++with_regen;
    else
      ++without;
    // Accepted paths are stable everywhere.
    for (int t = 0; t < 130; t += 16)
      CHECK(companion_spectral_radius({path.true_phi1[t], path.true_phi2[t]}) <
            1.0 - 1e-8);
  }
  CHECK(with_regen > 0);
  CHECK(without > 0);
}

TEST_CASE("simulation validation") {
  CHECK_THROWS_AS(simulate_dgp(base_config(DgpId::kII, 5, 1)), ConfigError);
  auto negative = base_config(DgpId::kII, 100, 1);
  negative.noise_scale = -0.5;
  CHECK_THROWS_AS(simulate_dgp(negative), ConfigError);
}

TEST_CASE("true-path connectedness on the noise-free schedule") {
  auto config = base_config(DgpId::kII, 100, 5);
  config.noise_scale = 0.0;
  const auto path = simulate_dgp(config);
  const auto parts = study_band_partition(100);
  const auto truth = true_connectedness(path, parts, 100);

  REQUIRE(truth.times.size() == 100);
  REQUIRE(truth.sets.size() == 2);
  CHECK(truth.masked == 0);

  // Early on the autoregressive links are near zero: what little spillover
  // exists comes from the frequency-flat contemporaneous correlation, which
  // the wider high band absorbs. At the persistence peak the low band
  // dominates.
  CHECK(truth.sets[0][24].total < truth.sets[1][24].total);
  CHECK(truth.sets[0][99].total > truth.sets[1][99].total);
  CHECK(truth.sets[0][99].total > truth.sets[0][0].total);
  for (int b = 0; b < 2; ++b)
    for (int t = 0; t < 100; ++t) CHECK(truth.sets[b][t].total >= 0.0);

  // Band measures add up to the full-spectrum measures.
  for (int t : {10, 50, 90}) {
    const auto full = reconstruct_time_domain({truth.sets[0][t], truth.sets[1][t]});
    const auto td_adj = compute_vma_spectrum({path.true_phi1[t], path.true_phi2[t]}, 100);
    const Matrix td = time_domain_gfevd(td_adj.psi, path.true_sigma[t]);
    const auto direct = compute_connectedness(td);
    CHECK(full.total == doctest::Approx(direct.total).epsilon(1e-10));
  }

  // Subset evaluation agrees with the full sweep.
  const auto subset = true_connectedness(path, parts, 100, {25, 50, 100});
  CHECK(subset.sets[0][1].total == doctest::Approx(truth.sets[0][49].total).epsilon(1e-14));
  CHECK_THROWS_AS(true_connectedness(path, parts, 100, {0}), ConfigError);
  CHECK_THROWS_AS(true_connectedness(path, parts, 100, {101}), ConfigError);
}

TEST_CASE("unstable true-path points are masked") {
  DgpPath path;
  path.true_phi0.assign(3, Vector::Zero(2));
  Matrix stable = Matrix::Identity(2, 2) * 0.3;
  Matrix unstable = Matrix::Identity(2, 2) * 1.2;
  path.true_phi1 = {stable, unstable, stable};
  path.true_phi2.assign(3, Matrix::Zero(2, 2));
  path.true_sigma.assign(3, Matrix::Identity(2, 2));
  path.panel.values = Matrix::Zero(3, 2);
  path.panel.time_labels = {"1", "2", "3"};
  path.panel.series_names = {"x1", "x2"};

  const auto parts = study_band_partition(64);
  const auto truth = true_connectedness(path, parts, 64);
  CHECK(truth.masked == 1);
  CHECK(truth.stable[0] == 1);
  CHECK(truth.stable[1] == 0);
  CHECK(truth.stable[2] == 1);
}
