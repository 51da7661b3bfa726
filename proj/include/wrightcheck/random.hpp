#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

namespace wrightcheck {

/// Reproducible generator for the randomized suites: std::mt19937_64 (whose
/// output sequence is fixed by the standard) with ranges drawn by rejection
/// sampling, so the same seed yields the same draws on every platform.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed), seed_(seed) {}

    std::uint64_t seed() const noexcept { return seed_; }

    /// Uniform integer in [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        if (lo > hi) throw std::invalid_argument("empty range");
        const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
        if (span == 0) return static_cast<std::int64_t>(engine_());
        const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % span);
        std::uint64_t draw;
        do {
            draw = engine_();
        } while (draw >= limit);
        return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + draw % span);
    }

    bool coin() { return uniform(0, 1) == 1; }

private:
    std::mt19937_64 engine_;
    std::uint64_t seed_;
};

}  // namespace wrightcheck
