#pragma once

#include <cstdint>

namespace mulink {

// splitmix64. Deterministic across platforms, unlike the standard library
// distributions, so fuzz logs replay bit-for-bit everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n). n must be positive.
    std::uint64_t below(std::uint64_t n) {
        // Rejection sampling to avoid modulo bias.
        std::uint64_t limit = n * ((~0ULL) / n);
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % n;
    }

    // Uniform in [lo, hi] inclusive.
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool coin() { return (next() & 1) != 0; }

private:
    std::uint64_t state_;
};

} // namespace mulink
