#pragma once

#include <cstdint>
#include <random>

namespace eip {

/// Deterministic 64-bit random stream. Identical seeds reproduce identical
/// draws bit-exactly on every platform: the engine is std::mt19937_64 (whose
/// output sequence is fixed by the standard) and all conversions to uniform
/// doubles / bounded integers are implemented here rather than delegated to
/// implementation-defined distributions.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : engine_(mix(seed)) {}

    /// Stream splitting: replica r of base seed s gets an independent stream.
    static SeededRng substream(std::uint64_t base_seed, std::uint64_t replica) {
        return SeededRng(mix(base_seed) ^ (mix(replica + 0x9e3779b97f4a7c15ULL) + 1));
    }

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform in [0,1) with 53 random bits.
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Unbiased uniform integer in {0,...,n-1}, n >= 1 (rejection sampling).
    std::uint64_t uniform_below(std::uint64_t n) {
        const std::uint64_t threshold = (0ULL - n) % n; // 2^64 mod n
        for (;;) {
            const std::uint64_t r = engine_();
            if (r >= threshold) return r % n;
        }
    }

    /// Uniform element of {1,...,n}.
    int uniform_1_to(int n) { return static_cast<int>(uniform_below(static_cast<std::uint64_t>(n))) + 1; }

    bool coin() { return (engine_() >> 63) != 0; }

private:
    // splitmix64 finalizer, used only to spread seeds before feeding the engine.
    static std::uint64_t mix(std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    std::mt19937_64 engine_;
};

} // namespace eip
