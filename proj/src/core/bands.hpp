#pragma once

#include <string>
#include <vector>

#include "core/types.hpp"

namespace dynnet {

// Parses a comma-separated list of period ranges such as "1:5,5:inf" into
// band specs ordered as written. Each range lo:hi is in periods-per-cycle;
// "inf" (any case) marks an unbounded period.
std::vector<BandSpec> parse_band_specs(const std::string& text);

// Default two-band split: transitory [1,5] periods, persistent [5,inf).
std::vector<BandSpec> default_band_specs();

// Converts specs into a concrete partition of the frequency grid
// omega_j = 2*pi*j/H, j = 0..H-1. Each grid point is folded onto (0, pi]
// via min(omega, 2*pi - omega) and assigned to the band whose interval
// (omega_low, omega_high] contains it; the zero frequency goes to the band
// whose interval starts at 0. Throws ConfigError when any grid point maps to
// no band or to more than one band.
BandPartition build_band_partition(const std::vector<BandSpec>& specs, int grid_size);

}  // namespace dynnet
