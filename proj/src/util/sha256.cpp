#include "nah/util/sha256.hpp"

#include <openssl/evp.h>

#include <array>
#include <stdexcept>

#include "nah/util/binio.hpp"

namespace nah::util {

std::string sha256_hex(const void* data, size_t bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  if (!EVP_Digest(data, bytes, digest.data(), &len, EVP_sha256(), nullptr))
    throw std::runtime_error("EVP_Digest failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 0xf]);
  }
  return out;
}

std::string sha256_hex(const std::vector<uint8_t>& data) {
  return sha256_hex(data.data(), data.size());
}

std::string sha256_file(const std::string& path) {
  auto bytes = read_bytes(path);
  return sha256_hex(bytes);
}

}  // namespace nah::util
