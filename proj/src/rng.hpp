#pragma once

#include <cstdint>

namespace qmincut {

// Counter-based splittable generator. Every stream is a (key, counter)
// pair; child streams derive a fresh key from a tag, so subroutine seeds
// never depend on how much randomness a sibling consumed.
struct Rng {
    uint64_t key = 0;
    uint64_t ctr = 0;

    explicit Rng(uint64_t seed = 0) : key(mix(seed ^ 0x9e3779b97f4a7c15ull)) {}

    static uint64_t mix(uint64_t z) {
        z += 0x9e3779b97f4a7c15ull;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    uint64_t next() { return mix(key ^ mix(ctr++)); }

    // derive an independent stream; tag picks the child
    Rng split(uint64_t tag) const {
        Rng r;
        r.key = mix(key ^ mix(tag ^ 0xd1342543de82ef95ull));
        r.ctr = 0;
        return r;
    }

    // uniform in [0, bound), bound >= 1; rejection-free 128-bit scaling
    uint64_t below(uint64_t bound) {
        return (uint64_t)(((unsigned __int128)next() * bound) >> 64);
    }

    // uniform in [lo, hi] inclusive
    int64_t range(int64_t lo, int64_t hi) {
        return lo + (int64_t)below((uint64_t)(hi - lo + 1));
    }

    double real() { return (next() >> 11) * 0x1.0p-53; }
};

} // namespace qmincut
