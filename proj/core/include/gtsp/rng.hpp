#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace gtsp {

/// SplitMix64 finalizer; used to derive independent per-run seeds from a
/// master seed and a counter.
constexpr std::uint64_t mix_seed(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Seed for the `counter`-th unit of work under `master`.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t counter) noexcept {
    return mix_seed(mix_seed(master) ^ counter);
}

/// Seeded generator. The integer and real draws are computed here rather than
/// through <random> distributions so that streams are identical across
/// standard library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform on [0, 1).
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform on the open interval (0, 1).
    double uniform_open01() { return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53; }

    /// Uniform on (lo, hi).
    double uniform_open(double lo, double hi) { return lo + (hi - lo) * uniform_open01(); }

    /// Uniform integer in [0, bound). `bound` must be positive.
    std::size_t below(std::size_t bound) {
        const std::uint64_t b = bound;
        const std::uint64_t limit = std::uint64_t(-1) - (std::uint64_t(-1) % b);
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return static_cast<std::size_t>(x % b);
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace gtsp
