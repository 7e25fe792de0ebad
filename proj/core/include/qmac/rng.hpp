#pragma once

#include <cstdint>

namespace qmac {

// Counter-based randomness: every draw is a pure function of
// (seed, stream, index), so results never depend on evaluation order and
// disjoint index ranges can be generated concurrently.

/// SplitMix64 finalizer; bijective on 64-bit words with full avalanche.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

/// Keyed counter hash. Chaining the finalizer keeps the three key parts
/// from cancelling each other the way a plain XOR of mixes would.
constexpr std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t stream,
                                     std::uint64_t index) {
    return mix64(mix64(mix64(seed) ^ stream) ^ index);
}

/// Map a hash word to a double in [0, 1), using the top 53 bits.
constexpr double unit_double(std::uint64_t h) {
    return static_cast<double>(h >> 11) * 0x1.0p-53;
}

/// Uniform draw in [0, 1) addressed by (seed, stream, index).
constexpr double unit_draw(std::uint64_t seed, std::uint64_t stream,
                           std::uint64_t index) {
    return unit_double(counter_hash(seed, stream, index));
}

} // namespace qmac
