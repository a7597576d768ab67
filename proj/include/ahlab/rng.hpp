#pragma once

#include <cstdint>

namespace ahlab {

// Counter-mode generator: each draw is a stateless hash of (seed, stream
// indices), so generation order never affects the output and independent
// streams can run in parallel.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

inline std::uint64_t counter_draw(std::uint64_t seed, std::uint64_t a,
                                  std::uint64_t b, std::uint64_t c = 0) {
    std::uint64_t h = mix64(seed);
    h = mix64(h ^ a);
    h = mix64(h ^ b);
    h = mix64(h ^ c);
    return h;
}

// Per-cell seed for sweeps and trees: schedule-independent.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t n,
                                 std::uint64_t d, std::uint64_t r,
                                 std::uint64_t trial) {
    return counter_draw(base, n, (d << 32) | r, trial);
}

}  // namespace ahlab
