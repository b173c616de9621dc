#pragma once

#include <cstdint>
#include <vector>

#include "oscillab/rational.hpp"

namespace oscillab {

// splitmix64 (Steele, Lea, Flood 2014): the documented generator behind
// every randomized suite. Fixed constants, no platform-dependent
// distributions, so identical seeds give identical reports everywhere.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, bound)
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    // uniform in [lo, hi]
    std::uint64_t range(std::uint64_t lo, std::uint64_t hi) {
        return lo + below(hi - lo + 1);
    }

    bool coin() { return (next() & 1) != 0; }

    // rational in [0, 1] with denominator <= max_den
    Rational unit_rational(std::uint64_t max_den) {
        const std::uint64_t den = range(1, max_den);
        const std::uint64_t num = below(den + 1);
        return Rational(num, den);
    }

private:
    std::uint64_t state_;
};

} // namespace oscillab
