#pragma once

#include <cstdint>

namespace netlines {

// Threshold convention used everywhere: a weighted sum of exactly zero maps
// to the negative side.
inline int sign(double x) { return x > 0.0 ? 1 : -1; }

// splitmix64 round; used to derive independent per-stage / per-run seeds
// from one user-facing seed.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace netlines
