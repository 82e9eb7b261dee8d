#pragma once

#include <cstdint>
#include <random>

namespace tfp {

/// Generator used by every sampler in the library.
using Rng = std::mt19937_64;

/// splitmix64 finalizer; a bijection on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Seed of trial `trial_index` under `master_seed`:
/// mix64(master_seed + (trial_index + 1) * 0x9E3779B97F4A7C15).
/// For a fixed master seed this is injective over all 2^64 indices, because
/// the golden-ratio increment is odd and mix64 is a bijection.
constexpr std::uint64_t derive_trial_seed(std::uint64_t master_seed, std::uint64_t trial_index) {
  return mix64(master_seed + (trial_index + 1) * 0x9E3779B97F4A7C15ULL);
}

inline Rng make_rng(std::uint64_t seed) { return Rng(seed); }

}  // namespace tfp
