#include "core/bands.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "core/errors.hpp"

namespace dynnet {

namespace {

constexpr double kPi = std::numbers::pi;

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  auto e = s.find_last_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, e - b + 1);
}

double parse_period(const std::string& token, const std::string& range) {
  std::string t = trim(token);
  std::string lower;
  for (char c : t) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (lower == "inf") return std::numeric_limits<double>::infinity();
  try {
    size_t pos = 0;
    double v = std::stod(t, &pos);
    if (pos != t.size()) throw std::invalid_argument(t);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("cannot parse period '" + token + "' in band range '" + range + "'");
  }
}

}  // namespace

std::vector<BandSpec> parse_band_specs(const std::string& text) {
  std::vector<BandSpec> specs;
  std::stringstream ss(text);
  std::string range;
  while (std::getline(ss, range, ',')) {
    std::string r = trim(range);
    if (r.empty()) continue;
    auto colon = r.find(':');
    if (colon == std::string::npos)
      throw ConfigError("band range '" + r + "' must look like lo:hi (periods)");
    BandSpec spec;
    spec.by_period = true;
    spec.period_lo = parse_period(r.substr(0, colon), r);
    spec.period_hi = parse_period(r.substr(colon + 1), r);
    if (!(spec.period_lo > 0.0))
      throw ConfigError("band range '" + r + "': lower period must be positive");
    if (!(spec.period_hi > spec.period_lo))
      throw ConfigError("band range '" + r + "': upper period must exceed lower period");
    // Periods [lo, hi] correspond to angular frequencies (2*pi/hi, 2*pi/lo].
    spec.omega_low = std::isinf(spec.period_hi) ? 0.0 : 2.0 * kPi / spec.period_hi;
    spec.omega_high = std::min(2.0 * kPi / spec.period_lo, kPi);
    std::ostringstream name;
    name << "band_" << r;
    spec.name = name.str();
    specs.push_back(spec);
  }
  if (specs.empty()) throw ConfigError("band list '" + text + "' contains no ranges");
  return specs;
}

std::vector<BandSpec> default_band_specs() {
  std::vector<BandSpec> specs;
  BandSpec transitory;
  transitory.name = "transitory";
  transitory.by_period = true;
  transitory.period_lo = 1.0;
  transitory.period_hi = 5.0;
  transitory.omega_low = 2.0 * kPi / 5.0;
  transitory.omega_high = kPi;
  BandSpec persistent;
  persistent.name = "persistent";
  persistent.by_period = true;
  persistent.period_lo = 5.0;
  persistent.period_hi = std::numeric_limits<double>::infinity();
  persistent.omega_low = 0.0;
  persistent.omega_high = 2.0 * kPi / 5.0;
  specs.push_back(persistent);
  specs.push_back(transitory);
  return specs;
}

BandPartition build_band_partition(const std::vector<BandSpec>& specs, int grid_size) {
  if (grid_size < 2) throw ConfigError("frequency grid needs at least 2 points");
  if (specs.empty()) throw ConfigError("band partition needs at least one band");
  BandPartition part;
  part.grid_size = grid_size;
  part.bands.reserve(specs.size());
  for (const auto& spec : specs) {
    FrequencyBand band;
    band.name = spec.name;
    band.omega_low = spec.omega_low;
    band.omega_high = spec.omega_high;
    part.bands.push_back(band);
  }
  for (int j = 0; j < grid_size; ++j) {
    const double omega = 2.0 * kPi * j / grid_size;
    const double folded = std::min(omega, 2.0 * kPi - omega);
    int owner = -1;
    for (std::size_t b = 0; b < part.bands.size(); ++b) {
      const auto& band = part.bands[b];
      const bool inside = (j == 0 || folded == 0.0)
                              ? band.omega_low == 0.0
                              : (folded > band.omega_low && folded <= band.omega_high);
      if (inside) {
        if (owner >= 0)
          throw ConfigError("grid point " + std::to_string(j) + " falls in bands '" +
                            part.bands[owner].name + "' and '" + band.name + "'");
        owner = static_cast<int>(b);
      }
    }
    if (owner < 0)
      throw ConfigError("grid point " + std::to_string(j) +
                        " (folded frequency " + std::to_string(folded) +
                        ") is covered by no band");
    part.bands[owner].fourier_indices.push_back(j);
  }
  return part;
}

}  // namespace dynnet
