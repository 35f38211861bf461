#pragma once

#include <cstdint>
#include <random>

namespace ssat {

/// Every seeded component draws from this engine so that a (seed, input)
/// pair reproduces its output exactly.
using Rng = std::mt19937_64;

/// Independent stream for one purpose derived from a user seed.
inline Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream),
                    static_cast<std::uint32_t>(stream >> 32)};
  return Rng(seq);
}

/// Uniform integer on the closed range [lo, hi].
inline std::uint64_t uniform_between(Rng &rng, std::uint64_t lo,
                                     std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

} // namespace ssat
