#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace seidel {

// Minimal SHA-256, used for config hashes and file digests in manifests.
std::string sha256_hex(std::string_view data);
std::string sha256_file_hex(const std::string& path);

}  // namespace seidel
