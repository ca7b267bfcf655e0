#pragma once

#include <cstdint>
#include <random>

namespace lrc {

// splitmix64; used to derive independent seed streams from a user seed.
inline uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Stream i of a root seed. Streams for distinct i are independent for our
// purposes (worker shards, per-class scan seeds, ...).
inline uint64_t derive_seed(uint64_t root, uint64_t stream) {
    uint64_t s = root ^ (0x5851f42d4c957f2dULL * (stream + 1));
    splitmix64(s);
    return splitmix64(s);
}

// The engine is std::mt19937_64 (bit-exact by the standard); bounded draws
// and unit doubles are implemented here rather than via std distributions,
// whose algorithms are implementation-defined.
using Rng = std::mt19937_64;

inline Rng make_rng(uint64_t seed) { return Rng(seed); }

// Uniform integer in [0, n), rejection sampled.
inline uint64_t uniform_below(Rng& rng, uint64_t n) {
    if (n <= 1) return 0;
    const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % n;
}

// Uniform double in [0, 1) with 53 bits.
inline double uniform_unit(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline bool bernoulli(Rng& rng, double p) { return uniform_unit(rng) < p; }

}  // namespace lrc
