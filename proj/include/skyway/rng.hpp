#pragma once

#include <cstdint>
#include <random>

namespace skyway {

// splitmix64 step; used to derive independent stream seeds from a master seed
// so adding a consumer never perturbs existing streams.
constexpr std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Uniform in [0, bound). Plain modulo: the bias at our bounds is far below
// anything observable, and the result only depends on the mt19937_64 output
// sequence, which the standard pins exactly.
inline std::uint64_t uniform_u64(std::mt19937_64& rng, std::uint64_t bound) {
  return bound == 0 ? 0 : rng() % bound;
}

// Uniform integer in [lo, hi] inclusive.
inline std::int64_t uniform_i64(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(
                  uniform_u64(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

// Uniform in [0, 1) from the top 53 bits.
inline double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform_real(std::mt19937_64& rng, double lo, double hi) {
  return lo + uniform_unit(rng) * (hi - lo);
}

}  // namespace skyway
