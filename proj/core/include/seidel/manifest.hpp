#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace seidel {

// One append-only record per CLI run, tying every reported number to a
// rerunnable command: command line, config hash, seed, wall time, digests
// of the files read and written, and the headline counts.
struct RunManifest {
    std::string command;
    std::string config_hash;
    std::uint64_t seed = 0;
    std::string version;
    std::int64_t wall_ms = 0;
    std::map<std::string, std::string> input_digests;
    std::map<std::string, std::string> output_digests;
    std::map<std::string, std::int64_t> counts;

    std::string to_json() const;
};

// Appends one JSON line to <dir>/manifest.jsonl, creating the directory if
// needed.
void append_manifest(const std::string& dir, const RunManifest& m);

// Cache directory resolution: explicit flag > SEIDEL_CACHE_DIR > ./.cache.
std::string resolve_cache_dir(const std::string& flag_value);

}  // namespace seidel
