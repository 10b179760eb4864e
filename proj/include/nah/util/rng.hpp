#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace nah::util {

// Deterministic seed derivation so that independent work units (plates,
// samples, noise realizations) get decorrelated streams from one master
// seed regardless of evaluation order.
inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline uint64_t mix_seed(uint64_t seed, std::string_view tag, uint64_t k = 0) {
  uint64_t h = seed;
  for (char c : tag) h = splitmix64(h ^ static_cast<uint64_t>(static_cast<unsigned char>(c)));
  return splitmix64(h ^ k);
}

inline std::mt19937_64 make_rng(uint64_t seed, std::string_view tag, uint64_t k = 0) {
  return std::mt19937_64(mix_seed(seed, tag, k));
}

}  // namespace nah::util
