#pragma once

#include <cstdint>

namespace deglag {

/// splitmix64: tiny, seedable, splittable-by-reseeding generator. Used for
/// everything randomized so results are a pure function of the 64-bit seed.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1): top 53 bits of next().
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

}  // namespace deglag
