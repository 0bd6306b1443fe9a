#pragma once

#include <cstdint>
#include <random>

namespace commdet {

using Rng = std::mt19937_64;

// SplitMix64 finalizer. Used to derive independent seed streams from a
// master seed: every (trial, purpose) pair gets its own engine, so results
// do not depend on the order in which trials execute.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t master, std::uint64_t stream) {
    return splitmix64(splitmix64(master) ^ splitmix64(stream * 0x9e3779b97f4a7c15ULL + 1));
}

}  // namespace commdet
