#pragma once

#include <cstdint>
#include <random>

namespace eca {

// SplitMix64 step: decorrelates nearby seeds before they reach the engine,
// so that replication seeds base ^ 0, base ^ 1, ... yield independent-looking
// streams.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Deterministic engine for a given 64-bit seed.  The full state is seeded
// via SplitMix64 (the recommended way to initialize large-state engines from
// a small seed).
inline std::mt19937_64 make_rng(std::uint64_t seed) {
    std::uint64_t s = seed;
    std::seed_seq seq{splitmix64(s), splitmix64(s), splitmix64(s), splitmix64(s)};
    return std::mt19937_64(seq);
}

// Seed for replication r of a run keyed by base_seed.  XOR keeps the scheme
// splittable: any replication can be re-run in isolation.
inline std::uint64_t replication_seed(std::uint64_t base_seed, std::uint64_t r) {
    return base_seed ^ r;
}

}  // namespace eca
