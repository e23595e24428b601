#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace dynnet {

std::uint64_t fnv1a64(const std::string& bytes);

// Hash of the canonical configuration JSON, rendered as "fnv1a64:<16 hex>".
std::string manifest_hash(const nlohmann::json& canonical_config);

// Methodology notes recorded in every manifest: the weighting and posterior
// conventions a reader needs to reproduce the numbers.
std::vector<std::string> methodology_notes();

// Manifest document: schema version, config hash, full canonical config,
// notes, and the list of files the run wrote. Deliberately timing-free so
// reruns are byte-identical; wall-clock diagnostics go to stderr.
nlohmann::json build_manifest(const nlohmann::json& canonical_config,
                              const std::vector<std::string>& outputs);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace dynnet
