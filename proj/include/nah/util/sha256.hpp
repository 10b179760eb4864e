#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace nah::util {

// Lowercase hex SHA-256 digest.
std::string sha256_hex(const void* data, size_t bytes);
std::string sha256_hex(const std::vector<uint8_t>& data);
std::string sha256_file(const std::string& path);

}  // namespace nah::util
