#pragma once

#include <string>
#include <string_view>

namespace stancelab {

// Hex digest of the given bytes (FIPS 180-4 SHA-256).
std::string sha256_hex(std::string_view data);

// Hex digest of a file's contents; throws ConfigError if it cannot be read.
std::string sha256_file(const std::string& path);

}  // namespace stancelab
