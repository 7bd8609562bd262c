#pragma once

#include <cstdint>
#include <random>

namespace polya {

/// splitmix64 finalizer; used to turn (master seed, stream index) pairs into
/// well-separated engine seeds.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Seed for derived stream `k` of `master`. Stream 0 is reserved for initial
/// conditions; trial t uses stream 1 + t. Fixed rule, part of the file-format
/// contract: reruns with the same master seed reproduce every draw.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
    return mix64(master + (stream + 1) * 0x9e3779b97f4a7c15ULL);
}

/// Uniform double in [0,1) from the engine's raw 64-bit output. Bypasses
/// std::uniform_real_distribution so sequences do not depend on the standard
/// library implementation.
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace polya
