#pragma once

#include <cstdint>
#include <random>

namespace lrpc {

/// SplitMix64 finalizer. Used to derive independent per-trial streams.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Seed of the stream for trial `index` of an experiment seeded with `seed`:
///   splitmix64(seed ^ splitmix64(index))
constexpr std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index) noexcept {
    return splitmix64(seed ^ splitmix64(index));
}

/// Deterministic generator: std::mt19937_64 plus rejection-sampled bounded
/// draws, so sequences do not depend on the standard library's distributions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [0, bound). bound must be nonzero.
    std::uint64_t below(std::uint64_t bound) {
        if ((bound & (bound - 1)) == 0) return engine_() & (bound - 1);
        // Reject the 2^64 mod bound smallest draws; the rest split evenly.
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t x = engine_();
            if (x >= threshold) return x % bound;
        }
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 engine_;
};

}  // namespace lrpc
