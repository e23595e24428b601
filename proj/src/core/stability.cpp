#include "core/stability.hpp"

#include <Eigen/Eigenvalues>

#include "core/errors.hpp"

namespace dynnet {

double companion_spectral_radius(const std::vector<Matrix>& phi) {
  if (phi.empty()) throw ConfigError("companion matrix needs at least one lag matrix");
  const int p = static_cast<int>(phi.size());
  const int N = static_cast<int>(phi[0].rows());
  Matrix comp = Matrix::Zero(N * p, N * p);
  for (int g = 0; g < p; ++g) comp.block(0, g * N, N, N) = phi[g];
  if (p > 1)
    comp.block(N, 0, N * (p - 1), N * (p - 1)) = Matrix::Identity(N * (p - 1), N * (p - 1));
  Eigen::EigenSolver<Matrix> es(comp, /*computeEigenvectors=*/false);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

bool check_stability(const std::vector<Matrix>& phi) {
  return companion_spectral_radius(phi) < 1.0 - 1e-8;
}

}  // namespace dynnet
