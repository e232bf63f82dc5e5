#pragma once

#include <cstdint>
#include <random>

namespace freeconv {

inline constexpr const char* kRngId = "splitmix64+mt19937_64";

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Per-trial generator: independent of how trials are partitioned across
// threads, so search output depends only on (seed, trial).
inline std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
  return std::mt19937_64(splitmix64(splitmix64(seed) + trial));
}

}  // namespace freeconv
