#pragma once

#include <cstdint>

namespace hrank {

/// SplitMix64 stream. Cheap to seed, so independent streams can be derived
/// per work item (e.g. one per (source node, walker) pair), which keeps
/// results independent of thread scheduling.
struct SplitMix64 {
    std::uint64_t state = 0;

    static std::uint64_t scramble(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Stream keyed by (seed, a, b); distinct keys give unrelated streams.
    static SplitMix64 keyed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
        return {scramble(scramble(seed ^ (a + 0x9e3779b97f4a7c15ULL)) ^
                         (b + 0xbf58476d1ce4e5b9ULL))};
    }

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        return scramble(z);
    }

    /// Uniform double in [0, 1).
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, n).
    std::uint64_t next_below(std::uint64_t n) {
        return static_cast<std::uint64_t>(next_unit() * static_cast<double>(n));
    }
};

}  // namespace hrank
