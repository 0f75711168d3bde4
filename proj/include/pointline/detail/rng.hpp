#pragma once

#include <cstdint>
#include <random>

namespace pl::detail {

// Stateless mixer used to derive independent substreams from one user seed.
inline std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

inline std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t stream) {
  return std::mt19937_64(splitmix64(seed ^ splitmix64(stream + 1)));
}

// Uniform double in [0, 1) with platform-independent bit pattern (the
// standard distributions are implementation-defined, which would break the
// byte-identical determinism contract).
inline double canonical(std::mt19937_64& g) {
  return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

// Uniform double in [-1, 1).
inline double symmetric(std::mt19937_64& g) {
  return 2.0 * canonical(g) - 1.0;
}

}  // namespace pl::detail
