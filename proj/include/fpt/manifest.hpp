#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fpt {

inline constexpr const char* kToolVersion = "0.1.0";

// FNV-1a, 64-bit. Cheap, dependency-free, and plenty for change detection;
// nothing here is security-sensitive.
std::uint64_t fnv1a64(const void* data, std::size_t len);
std::uint64_t fnv1a64_file(const std::string& path);

// Manifest JSON for one run: tool version, UTC timestamp, the full
// configuration (already-serialized JSON object), and per-output content
// hashes. Re-running the same configuration reproduces every exact output
// bit-for-bit and every seeded output sample-for-sample, so equal config
// hashes imply equal output hashes.
std::string manifest_json(const std::string& command, const std::string& config_json,
                          const std::vector<std::string>& output_paths);

void write_manifest(const std::string& path, const std::string& command,
                    const std::string& config_json,
                    const std::vector<std::string>& output_paths);

}  // namespace fpt
