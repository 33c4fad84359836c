#pragma once

#include <cstdint>
#include <random>

#include "bfx/boolfn.hpp"

namespace bfx {

// splitmix64; used to derive independent streams from (seed, index) so that
// sampled checks are reproducible and independent of any parallel split.
inline uint64_t mix64(uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::mt19937_64 stream_rng(uint64_t seed, uint64_t index) {
    return std::mt19937_64(mix64(seed ^ mix64(index)));
}

BooleanFunction random_function(int n, std::mt19937_64& rng);

// Exactly half the entries +1.
BooleanFunction random_unbiased(int n, std::mt19937_64& rng);

Rational random_rational(std::mt19937_64& rng, long max_den = 1000);

}  // namespace bfx
