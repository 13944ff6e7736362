#pragma once

#include <cstdint>

#include "sdfvol/vec3.hpp"

namespace sdfvol {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Derive the seed of an independent per-ray/per-pixel stream from a global
/// seed and a stream index. Identical inputs give identical streams
/// regardless of scheduling, which is what makes parallel renders
/// reproducible.
inline std::uint64_t stream_seed(std::uint64_t global_seed, std::uint64_t stream_index) {
    std::uint64_t s = global_seed;
    std::uint64_t a = splitmix64(s);
    s ^= stream_index * 0xda942042e4dd58b5ULL;
    return a ^ splitmix64(s);
}

// PCG32 (O'Neill). Small, fast, portable; we avoid std distributions because
// their outputs are implementation-defined.
class Pcg32 {
public:
    explicit Pcg32(std::uint64_t seed = 0x853c49e6748fea9bULL, std::uint64_t seq = 0xda3e39cb94b95bdbULL) {
        state_ = 0u;
        inc_ = (seq << 1u) | 1u;
        next_u32();
        state_ += seed;
        next_u32();
    }

    std::uint32_t next_u32() {
        const std::uint64_t old = state_;
        state_ = old * 6364136223846793005ULL + inc_;
        const std::uint32_t xorshifted = static_cast<std::uint32_t>(((old >> 18u) ^ old) >> 27u);
        const std::uint32_t rot = static_cast<std::uint32_t>(old >> 59u);
        return (xorshifted >> rot) | (xorshifted << ((32u - rot) & 31u));
    }

    std::uint64_t next_u64() {
        const std::uint64_t hi = next_u32();
        return (hi << 32) | next_u32();
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform point on the unit sphere.
    Vec3 next_unit_vector() {
        // Marsaglia rejection; expected < 1.28 iterations.
        for (;;) {
            const double a = 2.0 * next_double() - 1.0;
            const double b = 2.0 * next_double() - 1.0;
            const double s = a * a + b * b;
            if (s >= 1.0 || s == 0.0) continue;
            const double r = 2.0 * std::sqrt(1.0 - s);
            return {a * r, b * r, 1.0 - 2.0 * s};
        }
    }

    /// Uniform point inside the ball of given radius.
    Vec3 next_in_ball(double radius) {
        const Vec3 u = next_unit_vector();
        const double r = radius * std::cbrt(next_double());
        return u * r;
    }

private:
    std::uint64_t state_;
    std::uint64_t inc_;
};

}  // namespace sdfvol
