#pragma once

#include <cstdint>
#include <random>

namespace gelfand {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Deterministic PRNG stream. mt19937_64 output is fully specified by the standard and
/// the derived uniforms below avoid implementation-defined std distributions, so a
/// (seed, trial) pair reproduces bit-identical samples on any platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

    static Rng for_trial(std::uint64_t seed, std::uint64_t trial) {
        return Rng(splitmix64(seed) ^ splitmix64(trial * 0xD1342543DE82EF95ULL + 1));
    }

    std::uint64_t next_u64() { return engine_(); }

    /// Unbiased uniform integer in [0, n), by rejection.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % n;
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 engine_;
};

struct RngConfig {
    std::uint64_t seed = 0;
};

}  // namespace gelfand
