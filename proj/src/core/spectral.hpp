#pragma once

#include <vector>

#include "core/types.hpp"

namespace dynnet {

// Moving-average representation Psi(0)..Psi(H-1) of the lag polynomial phi,
// Psi(0) = I and Psi(h) = sum_{g=1..min(h,p)} phi[g-1] * Psi(h-g).
std::vector<Matrix> compute_vma(const std::vector<Matrix>& phi, int truncation);

// VMA matrices plus their discrete Fourier transform on the H-point grid,
// response[j] = sum_h Psi(h) * exp(-i 2 pi j h / H). The twiddle table is
// built reflectively so response[H-j] is the bit-exact conjugate of
// response[j].
VmaSpectrum compute_vma_spectrum(const std::vector<Matrix>& phi, int truncation);

// Same transform for an externally supplied moving-average sequence; the
// grid size is the sequence length.
VmaSpectrum spectrum_from_psi(std::vector<Matrix> psi);

// Generalized FEVD shares aggregated within each band of the partition and
// row-normalized by the full-spectrum row sums, so the band matrices sum to
// a matrix whose rows each total 1.
std::vector<BandAdjacency> compute_band_adjacency(const VmaSpectrum& spectrum,
                                                  const Matrix& sigma,
                                                  const BandPartition& partition);

// H-truncated time-domain generalized FEVD, row-normalized. Aggregating the
// band adjacencies over a full partition reproduces this matrix.
Matrix time_domain_gfevd(const std::vector<Matrix>& psi, const Matrix& sigma);

}  // namespace dynnet
