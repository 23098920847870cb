#pragma once

#include <cstdint>

namespace bsl {

// splitmix64: the single documented generator behind every randomized suite.
// One 64-bit seed determines all draws, bit-identically on any platform, so
// failures replay exactly.
struct SplitMix64 {
    uint64_t state;

    explicit SplitMix64(uint64_t seed) : state(seed) {}

    uint64_t next() {
        state += 0x9e3779b97f4a7c15ull;
        uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1)
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double range(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    int pick(int n) { return static_cast<int>(next() % static_cast<uint64_t>(n)); }
};

}  // namespace bsl
