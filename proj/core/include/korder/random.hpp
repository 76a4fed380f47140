#pragma once

#include <cstdint>

namespace korder {

/// SplitMix64 finalizer. Bijective on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Seed of trial `index` under a run seed. Trials can be generated in any
/// order, on any thread, and still reproduce the sequential stream.
constexpr std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index) noexcept {
    return mix64(mix64(seed) ^ mix64(index + 0x632be59bd9b4e019ULL));
}

/// Counter-based generator: the n-th draw is a pure function of (key, n).
class CounterRng {
public:
    explicit constexpr CounterRng(std::uint64_t key) noexcept : key_(mix64(key)) {}

    constexpr std::uint64_t next() noexcept { return mix64(key_ ^ mix64(counter_++)); }

    /// Uniform on [0, 1) with 53 random bits.
    constexpr double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform on {0, ..., n - 1}; n > 0. Modulo bias is below 2^-40 for small n.
    constexpr std::uint64_t below(std::uint64_t n) noexcept { return next() % n; }

    constexpr std::uint64_t counter() const noexcept { return counter_; }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

}  // namespace korder
