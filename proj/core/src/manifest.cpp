#include "seidel/manifest.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace seidel {

std::string RunManifest::to_json() const {
    nlohmann::json j;
    j["command"] = command;
    j["config_hash"] = config_hash;
    j["seed"] = seed;
    j["version"] = version;
    j["wall_ms"] = wall_ms;
    j["inputs"] = input_digests;
    j["outputs"] = output_digests;
    j["counts"] = counts;
    return j.dump();
}

void append_manifest(const std::string& dir, const RunManifest& m) {
    std::filesystem::create_directories(dir);
    std::ofstream out(dir + "/manifest.jsonl", std::ios::app);
    if (!out) throw std::runtime_error("append_manifest: cannot open manifest in " + dir);
    out << m.to_json() << "\n";
}

std::string resolve_cache_dir(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("SEIDEL_CACHE_DIR")) {
        if (*env) return env;
    }
    return ".cache";
}

}  // namespace seidel
