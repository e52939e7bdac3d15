#pragma once

#include <cstdint>
#include <string_view>

namespace lis {

// All library-level randomness is counter-based splitmix64: stream value i is
// mix64(seed + (i+1)*kGolden). Any index can be sampled without sequential
// state, which is what makes runs checkpoint-free deterministic.
inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

constexpr std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ull;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBull;
  z ^= z >> 31;
  return z;
}

constexpr std::uint64_t rng_at(std::uint64_t seed, std::uint64_t index) {
  return mix64(seed + (index + 1) * kGolden);
}

// P(true) = floor(p * 2^64) / 2^64 on stream position (seed, index).
inline bool bernoulli_at(std::uint64_t seed, std::uint64_t index, double p) {
  if (p <= 0.0) return false;
  if (p >= 1.0) return true;
  const double two64 = 18446744073709551616.0;
  return rng_at(seed, index) < static_cast<std::uint64_t>(p * two64);
}

// FNV-1a 64, used for name hashing and input-file digests.
constexpr std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace lis
