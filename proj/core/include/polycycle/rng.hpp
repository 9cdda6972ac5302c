#pragma once

#include <cstdint>

namespace polycycle {

// Counter-based generator: the stream is a pure function of (seed, chunk),
// so chunked runs reproduce regardless of how chunks are scheduled.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    SplitMix64(std::uint64_t seed, std::uint64_t chunk)
        : state_(mix(seed ^ mix(chunk + 0x9e3779b97f4a7c15ULL))) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix(state_);
    }

    // Uniform on [0, n) by rejection; exact, no modulo bias.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t threshold = (0ULL - n) % n;  // 2^64 mod n
        for (;;) {
            const std::uint64_t x = next();
            if (x >= threshold) return x % n;
        }
    }

    double unit() {  // [0, 1) with 53 random bits
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

}  // namespace polycycle
