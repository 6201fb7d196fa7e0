#pragma once

#include <cstdint>
#include <random>

namespace edgestat {

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Deterministic across platforms: mt19937_64 has a standardized output
// sequence and the bounded draw below avoids std::uniform_int_distribution
// (whose algorithm is implementation-defined).
class Rng {
public:
    explicit Rng(uint64_t seed) : gen_(splitmix64(seed)) {}

    static Rng substream(uint64_t seed, uint64_t stream) {
        return Rng(splitmix64(seed ^ (0x5851f42d4c957f2dULL * (stream + 1))));
    }

    uint64_t next_u64() { return gen_(); }

    /// Uniform in [0, bound), bound >= 1. Unbiased via rejection.
    uint64_t below(uint64_t bound) {
        const uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        uint64_t x;
        do {
            x = gen_();
        } while (x >= limit);
        return x % bound;
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 gen_;
};

}  // namespace edgestat
