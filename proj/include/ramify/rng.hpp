#pragma once

#include <cstdint>

#include "ramify/fp.hpp"

namespace ramify {

// splitmix64: tiny splittable PRNG with exact cross-platform behaviour.
// Every randomized routine takes one of these seeded explicitly, so any
// recorded (prime, seed) pair replays bit-for-bit.
struct SplitMix64 {
    std::uint64_t state = 0;

    SplitMix64() = default;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Independent child stream; advancing the child never touches the parent.
    SplitMix64 split() { return SplitMix64(next() ^ 0x5851f42d4c957f2dull); }

    std::uint32_t below(std::uint32_t n) { return static_cast<std::uint32_t>(next() % n); }

    Fp field_elt(const Prime& p) { return Fp::raw(below(p.value()), p.value()); }

    Fp nonzero_elt(const Prime& p) {
        return Fp::raw(1u + below(p.value() - 1u), p.value());
    }
};

} // namespace ramify
