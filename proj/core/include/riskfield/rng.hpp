#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace riskfield {

// Deterministic helpers on top of mt19937_64 (whose output is pinned by the
// standard). std::*_distribution is avoided: its output differs between
// standard-library implementations, which would break byte-identical runs.

inline std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Engine for sub-stream `stream` of a base seed.
inline std::mt19937_64 make_rng(std::uint64_t base_seed, std::uint64_t stream) {
  return std::mt19937_64(splitmix64(base_seed ^ splitmix64(stream)));
}

/// Uniform double in [0, 1).
inline double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform double in [lo, hi).
inline double uniform_range(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform_unit(rng);
}

/// One standard-normal draw (Box-Muller; consumes two uniforms).
inline double gaussian(std::mt19937_64& rng) {
  double u1 = uniform_unit(rng);
  const double u2 = uniform_unit(rng);
  if (u1 <= 0.0) {
    u1 = 0x1.0p-53;
  }
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
}

}  // namespace riskfield
