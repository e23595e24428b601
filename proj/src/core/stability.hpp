#pragma once

#include <vector>

#include "core/types.hpp"

namespace dynnet {

// Largest modulus among eigenvalues of the companion matrix of the lag
// polynomial described by phi (one N x N matrix per lag).
double companion_spectral_radius(const std::vector<Matrix>& phi);

// True when the companion spectral radius is below 1 - 1e-8.
bool check_stability(const std::vector<Matrix>& phi);

}  // namespace dynnet
