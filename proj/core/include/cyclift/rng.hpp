#pragma once

#include <cmath>
#include <cstdint>

namespace cyclift {

// splitmix64: tiny, portable, and good enough for Monte Carlo channel noise.
// Used instead of <random> engines+distributions so that results are
// bit-identical across standard libraries.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Standard normal via Box-Muller (one value per call, no cached state).
    double next_gaussian() {
        double u1 = next_double();
        while (u1 == 0.0) u1 = next_double();
        double u2 = next_double();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

private:
    std::uint64_t state_;
};

// Counter-based per-stream seed derivation: frame k of a run seeded with s
// uses derive_seed(s, k), so parallel schedules cannot change the noise.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    SplitMix64 mix(seed ^ (0xA0761D6478BD642FULL + stream * 0xE7037ED1A0B428DBULL));
    mix.next();
    return mix.next();
}

}  // namespace cyclift
