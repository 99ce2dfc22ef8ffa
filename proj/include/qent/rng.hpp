// rng.hpp
// Deterministic random primitives. mt19937_64 has a standardized output
// sequence; the helpers below avoid std::uniform_int_distribution, whose
// algorithm is implementation-defined, so seeded runs produce identical
// results on any platform/standard library.

#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace qent {

using Rng = std::mt19937_64;

// Uniform integer in [0, bound) via rejection sampling.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

// Uniform double in [0, 1) with 53 random bits.
inline double uniform_unit(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// splitmix64: decorrelates derived seeds (base seed + stream index).
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + stream * 0x9e3779b97f4a7c15ULL + 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// k distinct values from [0, n), returned sorted ascending.
inline std::vector<int> sample_distinct(Rng& rng, int n, int k) {
    std::vector<int> picked;
    picked.reserve(k);
    while (static_cast<int>(picked.size()) < k) {
        const int v = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n)));
        bool seen = false;
        for (int p : picked) seen = seen || (p == v);
        if (!seen) picked.push_back(v);
    }
    std::sort(picked.begin(), picked.end());
    return picked;
}

}  // namespace qent
