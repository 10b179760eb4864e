#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace nah::util {

// Raw little-endian blob I/O for the dataset and weight formats.
// x86-64 is little-endian; values are written verbatim.

void write_f32(const std::string& path, const std::vector<float>& data);
void write_u8(const std::string& path, const std::vector<uint8_t>& data);
std::vector<float> read_f32(const std::string& path);
std::vector<uint8_t> read_u8(const std::string& path);
std::vector<uint8_t> read_bytes(const std::string& path);
void write_text(const std::string& path, const std::string& text);
std::string read_text(const std::string& path);

}  // namespace nah::util
