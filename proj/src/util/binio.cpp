#include "nah/util/binio.hpp"

#include <cstring>
#include <fstream>

#include "nah/util/errors.hpp"

namespace nah::util {

namespace {

void write_raw(const std::string& path, const void* data, size_t bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ValidationError("cannot open for writing: " + path);
  out.write(static_cast<const char*>(data), static_cast<std::streamsize>(bytes));
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::vector<uint8_t> read_raw(const std::string& path) {
  std::ifstream in(path, std::ios::binary | std::ios::ate);
  if (!in) throw ValidationError("cannot open for reading: " + path);
  const auto size = static_cast<size_t>(in.tellg());
  in.seekg(0);
  std::vector<uint8_t> buf(size);
  if (size > 0) in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(size));
  if (!in) throw std::runtime_error("read failed: " + path);
  return buf;
}

}  // namespace

void write_f32(const std::string& path, const std::vector<float>& data) {
  write_raw(path, data.data(), data.size() * sizeof(float));
}

void write_u8(const std::string& path, const std::vector<uint8_t>& data) {
  write_raw(path, data.data(), data.size());
}

std::vector<float> read_f32(const std::string& path) {
  auto bytes = read_raw(path);
  if (bytes.size() % sizeof(float) != 0)
    throw ValidationError("file size not a multiple of 4: " + path);
  std::vector<float> out(bytes.size() / sizeof(float));
  std::memcpy(out.data(), bytes.data(), bytes.size());
  return out;
}

std::vector<uint8_t> read_u8(const std::string& path) { return read_raw(path); }

std::vector<uint8_t> read_bytes(const std::string& path) { return read_raw(path); }

void write_text(const std::string& path, const std::string& text) {
  write_raw(path, text.data(), text.size());
}

std::string read_text(const std::string& path) {
  auto bytes = read_raw(path);
  return std::string(bytes.begin(), bytes.end());
}

}  // namespace nah::util
