#include "core/posterior.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <random>

#include "core/errors.hpp"
#include "core/rng.hpp"
#include "core/stability.hpp"

namespace dynnet {

Matrix robust_cholesky(const Matrix& m, const char* what) {
  Matrix sym = 0.5 * (m + m.transpose());
  Eigen::LLT<Matrix> llt(sym);
  if (llt.info() == Eigen::Success) return llt.matrixL();
  const double jitter = 1e-10 * sym.diagonal().mean();
  Matrix jittered = sym + jitter * Matrix::Identity(sym.rows(), sym.cols());
  Eigen::LLT<Matrix> retry(jittered);
  if (retry.info() == Eigen::Success) return retry.matrixL();
  Eigen::SelfAdjointEigenSolver<Matrix> es(sym);
  throw NumericError(std::string(what) +
                     " is not positive definite; smallest eigenvalue " +
                     std::to_string(es.eigenvalues().minCoeff()));
}

PosteriorParams compute_posterior(const TimeSeriesPanel& panel, int s,
                                  const PriorSpec& prior, const KernelWeights& weights,
                                  int p) {
  const int T = static_cast<int>(panel.rows());
  const int N = static_cast<int>(panel.cols());
  if (s <= p || s > T)
    throw ConfigError("focal time " + std::to_string(s) + " outside (" +
                      std::to_string(p) + ", " + std::to_string(T) + "]");
  const int Teff = T - p;
  if (weights.rho.size() != Teff)
    throw ConfigError("kernel weight length " + std::to_string(weights.rho.size()) +
                      " does not match effective sample " + std::to_string(Teff));
  const int k = 1 + N * p;

  Matrix A(Teff, k);
  Matrix Y(Teff, N);
  for (int i = 0; i < Teff; ++i) {
    const int t = p + i;  // 0-based calendar row of the regressand
    A(i, 0) = 1.0;
    for (int g = 1; g <= p; ++g)
      for (int j = 0; j < N; ++j) A(i, 1 + (g - 1) * N + j) = panel.values(t - g, j);
    Y.row(i) = panel.values.row(t);
  }

  const Matrix AtD = A.transpose() * weights.rho.asDiagonal();
  PosteriorParams post;
  post.focal_time = s;
  post.xi_tilde = prior.xi0 + AtD * A;
  post.xi_tilde = 0.5 * (post.xi_tilde + post.xi_tilde.transpose()).eval();

  Eigen::LDLT<Matrix> xi_solver(post.xi_tilde);
  if (xi_solver.info() != Eigen::Success || !xi_solver.isPositive()) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(post.xi_tilde);
    throw NumericError("posterior precision scale singular; smallest eigenvalue " +
                       std::to_string(es.eigenvalues().minCoeff()));
  }
  post.phi_tilde = xi_solver.solve(prior.xi0 * prior.phi0 + AtD * Y);
  post.alpha_tilde = prior.alpha0 + weights.rho.sum();
  post.gamma_tilde = prior.gamma0 + Y.transpose() * weights.rho.asDiagonal() * Y +
                     prior.phi0.transpose() * prior.xi0 * prior.phi0 -
                     post.phi_tilde.transpose() * post.xi_tilde * post.phi_tilde;
  post.gamma_tilde = 0.5 * (post.gamma_tilde + post.gamma_tilde.transpose()).eval();
  return post;
}

PosteriorSampler::PosteriorSampler(const PosteriorParams& params, int N_, int p_) {
  N = N_;
  p = p_;
  phi_tilde = params.phi_tilde;
  alpha_tilde = params.alpha_tilde;
  chol_xi = robust_cholesky(params.xi_tilde, "posterior precision scale");
  const Matrix gamma_chol = robust_cholesky(params.gamma_tilde, "posterior Wishart scale");
  // Gamma^{-1} = L^{-T} L^{-1}; its lower Cholesky factor is the inverse
  // transpose of the Gamma factor re-factorized for numerical symmetry.
  Matrix gamma_inv = gamma_chol.transpose()
                         .triangularView<Eigen::Upper>()
                         .solve(gamma_chol.triangularView<Eigen::Lower>()
                                    .solve(Matrix::Identity(N, N)));
  chol_gamma_inv = robust_cholesky(gamma_inv, "inverse posterior Wishart scale");
}

namespace {

// Wishart(df, S) draw via the Bartlett factorization, S = L L' given.
Matrix bartlett_wishart(const Matrix& chol_scale, double df, RngEngine& rng) {
  const int N = static_cast<int>(chol_scale.rows());
  Matrix A = Matrix::Zero(N, N);
  std::normal_distribution<double> normal(0.0, 1.0);
  for (int i = 0; i < N; ++i) {
    std::gamma_distribution<double> chi2((df - i) / 2.0, 2.0);
    A(i, i) = std::sqrt(chi2(rng));
    for (int j = 0; j < i; ++j) A(i, j) = normal(rng);
  }
  Matrix M = chol_scale * A;
  return M * M.transpose();
}

}  // namespace

PosteriorDraw PosteriorSampler::draw(std::uint64_t seed) const {
  const int k = 1 + N * p;
  PosteriorDraw out;
  for (int attempt = 0; attempt < 50; ++attempt) {
    RngEngine rng(derive_seed(seed, static_cast<std::uint64_t>(attempt)));
    std::normal_distribution<double> normal(0.0, 1.0);

    const Matrix precision = bartlett_wishart(chol_gamma_inv, alpha_tilde, rng);
    Matrix chol_prec = robust_cholesky(precision, "sampled precision");
    Matrix sigma = chol_prec.transpose().triangularView<Eigen::Upper>().solve(
        chol_prec.triangularView<Eigen::Lower>().solve(Matrix::Identity(N, N)));
    sigma = 0.5 * (sigma + sigma.transpose()).eval();

    Matrix Z(k, N);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < N; ++j) Z(i, j) = normal(rng);
    // coef = phi_tilde + Lxi^{-T} Z Lsig', giving vec-covariance Sigma (x) Xi^{-1}
    const Matrix chol_sigma = robust_cholesky(sigma, "sampled covariance");
    Matrix B = chol_xi.transpose().triangularView<Eigen::Upper>().solve(Z);
    out.coef = phi_tilde + B * chol_sigma.transpose();
    out.sigma = sigma;
    out.intercept = out.coef.row(0).transpose();
    out.phi.assign(p, Matrix(N, N));
    for (int g = 1; g <= p; ++g)
      for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) out.phi[g - 1](i, j) = out.coef(1 + (g - 1) * N + j, i);
    out.stable = check_stability(out.phi);
    if (out.stable) return out;
  }
  return out;  // stable == false; caller excludes it from spectral aggregation
}

PosteriorDraw sample_posterior_draw(const PosteriorParams& params, int N, int p,
                                    std::uint64_t seed) {
  PosteriorSampler sampler(params, N, p);
  return sampler.draw(seed);
}

}  // namespace dynnet
