#pragma once

// Reproducible random graphs. SplitMix64 is fully specified by its
// fixed 64-bit constants, so generation is byte-identical across
// platforms and standard-library implementations.

#include <cstdint>

#include "bdd/graph.hpp"

namespace bdd {

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform draw from [0, 1) with 53 bits of precision.
    double next_unit() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    /// Uniform draw from [0, bound).
    std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

private:
    std::uint64_t state_;
};

/// G(n, p) on vertices 1..n; pairs are examined in ascending (u, v)
/// order, one draw per pair.
Graph erdos_renyi(int n, double p, std::uint64_t seed);

}  // namespace bdd
