#include "core/spectral.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "core/errors.hpp"

namespace dynnet {

std::vector<Matrix> compute_vma(const std::vector<Matrix>& phi, int truncation) {
  if (phi.empty()) throw ConfigError("moving-average recursion needs lag matrices");
  if (truncation < 1) throw ConfigError("truncation horizon must be positive");
  const int p = static_cast<int>(phi.size());
  const int N = static_cast<int>(phi[0].rows());
  std::vector<Matrix> psi;
  psi.reserve(truncation);
  psi.push_back(Matrix::Identity(N, N));
  for (int h = 1; h < truncation; ++h) {
    Matrix m = Matrix::Zero(N, N);
    for (int g = 1; g <= std::min(h, p); ++g) m += phi[g - 1] * psi[h - g];
    psi.push_back(std::move(m));
  }
  return psi;
}

VmaSpectrum spectrum_from_psi(std::vector<Matrix> psi) {
  if (psi.empty()) throw ConfigError("spectrum needs at least one moving-average matrix");
  VmaSpectrum spec;
  spec.psi = std::move(psi);
  const int H = static_cast<int>(spec.psi.size());
  const int N = static_cast<int>(spec.psi[0].rows());

  // exp(-i 2 pi m / H) for m = 0..H-1, reflected so conjugate pairs are exact.
  std::vector<std::complex<double>> root(H);
  for (int m = 0; m <= H / 2; ++m) {
    const double angle = -2.0 * std::numbers::pi * m / H;
    root[m] = {std::cos(angle), std::sin(angle)};
  }
  if (H % 2 == 0) root[H / 2] = {-1.0, 0.0};  // exact Nyquist root
  for (int m = H / 2 + 1; m < H; ++m) root[m] = std::conj(root[H - m]);

  spec.response.assign(H, CMatrix::Zero(N, N));
  for (int j = 0; j < H; ++j) {
    CMatrix sum = CMatrix::Zero(N, N);
    for (int h = 0; h < H; ++h)
      sum += spec.psi[h].cast<std::complex<double>>() *
             root[static_cast<std::size_t>(j) * h % H];
    spec.response[j] = std::move(sum);
  }
  return spec;
}

VmaSpectrum compute_vma_spectrum(const std::vector<Matrix>& phi, int truncation) {
  return spectrum_from_psi(compute_vma(phi, truncation));
}

std::vector<BandAdjacency> compute_band_adjacency(const VmaSpectrum& spectrum,
                                                  const Matrix& sigma,
                                                  const BandPartition& partition) {
  const int H = partition.grid_size;
  if (static_cast<int>(spectrum.response.size()) != H)
    throw ConfigError("frequency response length does not match partition grid");
  const int N = static_cast<int>(sigma.rows());

  // Per-grid-point numerators |(F_j Sigma)_{rc}|^2 and row power (F_j Sigma F_j^H)_{rr}.
  Vector row_power = Vector::Zero(N);
  std::vector<Matrix> numerator(H);
  for (int j = 0; j < H; ++j) {
    const CMatrix fs = spectrum.response[j] * sigma.cast<std::complex<double>>();
    numerator[j] = fs.cwiseAbs2();
    row_power += (fs * spectrum.response[j].adjoint()).diagonal().real();
  }

  std::vector<BandAdjacency> out;
  out.reserve(partition.bands.size());
  Matrix row_totals = Matrix::Zero(N, 1);
  for (std::size_t b = 0; b < partition.bands.size(); ++b) {
    BandAdjacency adj;
    adj.band_index = static_cast<int>(b);
    adj.theta = Matrix::Zero(N, N);
    for (int j : partition.bands[b].fourier_indices) adj.theta += numerator[j];
    for (int r = 0; r < N; ++r)
      for (int c = 0; c < N; ++c) adj.theta(r, c) /= sigma(c, c) * row_power(r);
    row_totals.col(0) += adj.theta.rowwise().sum();
    out.push_back(std::move(adj));
  }
  for (auto& adj : out)
    for (int r = 0; r < N; ++r) adj.theta.row(r) /= row_totals(r, 0);
  return out;
}

Matrix time_domain_gfevd(const std::vector<Matrix>& psi, const Matrix& sigma) {
  const int N = static_cast<int>(sigma.rows());
  Matrix num = Matrix::Zero(N, N);
  Vector denom = Vector::Zero(N);
  for (const auto& m : psi) {
    const Matrix ms = m * sigma;
    num += ms.cwiseAbs2();
    denom += (ms * m.transpose()).diagonal();
  }
  Matrix theta(N, N);
  for (int r = 0; r < N; ++r)
    for (int c = 0; c < N; ++c) theta(r, c) = num(r, c) / (sigma(c, c) * denom(r));
  for (int r = 0; r < N; ++r) theta.row(r) /= theta.row(r).sum();
  return theta;
}

}  // namespace dynnet
