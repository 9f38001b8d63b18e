#pragma once

#include <cstdint>
#include <random>

namespace gproj {

/// Deterministic seedable generator: mt19937_64 fed through splitmix64 both
/// for seeding and for per-sample stream splitting. Only raw 64-bit draws are
/// used (no std:: distributions), so sequences are reproducible across
/// platforms and toolchains.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(splitmix64(seed)) {}

    static constexpr const char* kName = "mt19937_64+splitmix64";

    /// Independent child stream for sample #idx of the given seed.
    static Rng stream(std::uint64_t seed, std::uint64_t idx) {
        return Rng(splitmix64(seed ^ splitmix64(idx + 0x9e3779b97f4a7c15ull)));
    }

    std::uint64_t next() { return eng_(); }

    /// Uniform in [0, n); n >= 1. Rejection sampling keeps it unbiased.
    std::uint64_t below(std::uint64_t n) {
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v = next();
        while (v >= limit) v = next();
        return v % n;
    }

    /// Uniform integer in [lo, hi] inclusive.
    long range(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool coin() { return (next() & 1) != 0; }

    static std::uint64_t splitmix64(std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ull;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
        return x ^ (x >> 31);
    }

private:
    std::mt19937_64 eng_;
};

} // namespace gproj
