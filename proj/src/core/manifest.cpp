#include "core/manifest.hpp"

#include <fstream>
#include <sstream>

#include "core/errors.hpp"

namespace dynnet {

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

std::string manifest_hash(const nlohmann::json& canonical_config) {
  const std::uint64_t h = fnv1a64(canonical_config.dump());
  char buf[32];
  std::snprintf(buf, sizeof(buf), "fnv1a64:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::vector<std::string> methodology_notes() {
  return {
      "kernel weights are normalized to sum to the effective sample size "
      "(sum w)^2 / sum w^2 rather than to one",
      "the effective kernel standard deviation is bandwidth_scale * W "
      "(default scale 2.5), calibrated so detection windows match the "
      "reference probability tables",
      "the posterior Wishart scale uses the completed-square conjugate "
      "update Gamma0 + Y'DY + Phi0'Xi0 Phi0 - PhiT'XiT PhiT",
      "unstable coefficient draws are redrawn up to 50 times and excluded "
      "from spectral aggregation afterwards",
  };
}

nlohmann::json build_manifest(const nlohmann::json& canonical_config,
                              const std::vector<std::string>& outputs) {
  nlohmann::json m;
  m["schema_version"] = 1;
  m["manifest_hash"] = manifest_hash(canonical_config);
  m["config"] = canonical_config;
  m["notes"] = methodology_notes();
  m["outputs"] = outputs;
  return m;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot open for writing: " + path);
  out << content;
  if (!out) throw DataError("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace dynnet
