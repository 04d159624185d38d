#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace skelgraph {

/// splitmix64 step. Used to derive independent sub-seeds from one master
/// seed so that e.g. the node initializer and the pixel sampler never share
/// a random stream.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Deterministic sub-seed for a named random stream.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
    return splitmix64(master + 0x100000001b3ULL * stream);
}

/// Stream ids used throughout the library and the CLI.
enum : std::uint64_t {
    kStreamInit = 1,     // initial node positions
    kStreamSampler = 2,  // pixel sampling during training
    kStreamNoise = 3,    // noise injection driven from a master seed
};

/// Unbiased uniform draw from [0, n). Rejection sampling on top of the raw
/// 64-bit engine output, so results do not depend on the standard library's
/// (implementation-defined) distribution objects.
inline std::uint64_t uniform_below(std::mt19937_64& engine, std::uint64_t n) {
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - max % n;
    std::uint64_t v = engine();
    while (v >= limit) v = engine();
    return v % n;
}

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform_unit(std::mt19937_64& engine) {
    return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

}  // namespace skelgraph
