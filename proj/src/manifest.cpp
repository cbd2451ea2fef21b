#include "fpt/manifest.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <vector>

#include "fpt/errors.hpp"
#include "fpt/json_io.hpp"

namespace fpt {

using nlohmann::json;

std::uint64_t fnv1a64(const void* data, std::size_t len) {
    const auto* p = static_cast<const unsigned char*>(data);
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::uint64_t fnv1a64_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file for hashing: " + path);
    std::uint64_t h = 0xcbf29ce484222325ULL;
    std::vector<char> buf(1 << 16);
    while (in) {
        in.read(buf.data(), static_cast<std::streamsize>(buf.size()));
        const std::streamsize got = in.gcount();
        for (std::streamsize i = 0; i < got; ++i) {
            h ^= static_cast<unsigned char>(buf[i]);
            h *= 0x100000001b3ULL;
        }
    }
    return h;
}

namespace {

std::string hex16(std::uint64_t v) {
    char out[17];
    std::snprintf(out, sizeof out, "%016llx", static_cast<unsigned long long>(v));
    return out;
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char out[32];
    std::strftime(out, sizeof out, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return out;
}

std::uint64_t file_size(const std::string& path) {
    std::ifstream in(path, std::ios::binary | std::ios::ate);
    if (!in) throw ParseError("cannot open file for sizing: " + path);
    return static_cast<std::uint64_t>(in.tellg());
}

}  // namespace

std::string manifest_json(const std::string& command, const std::string& config_json,
                          const std::vector<std::string>& output_paths) {
    json config;
    try {
        config = json::parse(config_json);
    } catch (const json::parse_error& e) {
        throw ContractError(std::string("manifest config is not valid JSON: ") + e.what());
    }
    json outputs = json::array();
    for (const auto& path : output_paths) {
        outputs.push_back(json{{"path", path},
                               {"bytes", file_size(path)},
                               {"fnv1a64", hex16(fnv1a64_file(path))}});
    }
    json doc{{"version", kToolVersion},
             {"created", utc_timestamp()},
             {"command", command},
             {"config", std::move(config)},
             {"outputs", std::move(outputs)}};
    return doc.dump(2) + "\n";
}

void write_manifest(const std::string& path, const std::string& command,
                    const std::string& config_json,
                    const std::vector<std::string>& output_paths) {
    write_text_file(path, manifest_json(command, config_json, output_paths));
}

}  // namespace fpt
