#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>

namespace kerov {

/** One splitmix64 step: advances state and returns the mixed output. */
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

/** (seed, stream) fully determines every draw; stream is the trial index. */
struct RngSpec {
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;
};

/**
 * xoshiro256++ with an explicitly documented state derivation so runs can be
 * reproduced outside this codebase:
 *
 *   sm    = splitmix64(seed)                 (one step from state = seed)
 *   sm    = sm XOR (stream * 0xd1b54a32d192ed03)
 *   s[i]  = next four splitmix64 outputs continuing from sm, i = 0..3
 *
 * The stream multiplier is odd, so distinct streams give distinct states.
 *
 * Derived draws:
 *   uniform01: (next() >> 11) * 2^-53, in [0, 1)
 *   normal:    Box-Muller cosine branch, two uniforms per draw:
 *              sqrt(-2 ln(1 - u1)) * cos(2 pi u2)
 */
class Xoshiro256pp {
public:
    explicit Xoshiro256pp(RngSpec spec) {
        std::uint64_t sm = spec.seed;
        std::uint64_t h = splitmix64_next(sm);
        sm = h ^ (spec.stream * 0xd1b54a32d192ed03ull);
        for (auto& w : s_) w = splitmix64_next(sm);
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    double uniform01() { return double(next() >> 11) * 0x1.0p-53; }

    double normal() {
        const double u1 = uniform01();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log1p(-u1));
        return r * std::cos(2.0 * std::numbers::pi * u2);
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::array<std::uint64_t, 4> s_;
};

}  // namespace kerov
