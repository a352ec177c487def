#pragma once

#include <cstdint>
#include <random>

namespace ngfisk {

/// SplitMix64 finalizer. Used to derive independent stream seeds from a
/// base seed and stream indices.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Seed for stream (a, b) under `base`: splitmix64(splitmix64(splitmix64(base) ^ a) ^ b).
constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0) {
    return splitmix64(splitmix64(splitmix64(base) ^ a) ^ b);
}

/// Uniform draw strictly inside (0, 1) from the top 53 bits of a 64-bit word.
/// Independent of the standard library's distribution implementations.
inline double open_uniform(std::mt19937_64& engine) {
    const std::uint64_t bits = engine() >> 11;
    return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
}

}  // namespace ngfisk
