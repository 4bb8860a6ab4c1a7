#pragma once

#include <cstdint>

namespace bflab {

/// splitmix64 (Steele, Lea, Flood 2014).  Chosen over std::mt19937_64 for
/// the sampled sweeps because a sample's words can be derived from
/// (seed, sample index) alone, which keeps parallel runs byte-identical
/// regardless of worker count.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Independent stream for the index-th sample of a seeded run.
    static SplitMix64 for_sample(std::uint64_t seed, std::uint64_t index) {
        return SplitMix64(seed + (index + 1) * 0x9e3779b97f4a7c15ULL);
    }
};

}  // namespace bflab
