#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace svtail {

/// SplitMix64 finalizer (Stafford mix13 variant used by splitmix64).
inline constexpr std::uint64_t splitmix64_mix(std::uint64_t x) {
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
}

class SplitMix64 {
public:
    explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}
    constexpr std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return splitmix64_mix(state_);
    }

private:
    std::uint64_t state_;
};

/// Per-trial stream seed: avalanche mix of master_seed XOR trial index.
/// Fixed for the life of the project; simulation outputs depend on it.
inline constexpr std::uint64_t derive_trial_seed(std::uint64_t master_seed,
                                                 std::uint64_t trial_index) {
    return splitmix64_mix(master_seed ^ trial_index);
}

/// xoshiro256++ (Blackman & Vigna), state seeded by SplitMix64 expansion.
class Xoshiro256PlusPlus {
public:
    explicit Xoshiro256PlusPlus(std::uint64_t seed) {
        SplitMix64 sm(seed);
        for (auto& word : state_) word = sm.next();
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform double in [0, 1), 53 random bits.
    double uniform_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Standard normal draw by Box-Muller. Consumes exactly two uniforms;
    /// the sine companion is discarded to keep the draw count per call fixed.
    double gaussian() {
        const double u1 = 1.0 - uniform_unit();  // (0, 1], keeps log finite
        const double u2 = uniform_unit();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

    /// Fair sign in {-1, +1}. Consumes one raw draw.
    double rademacher_sign() { return (next() >> 63) ? 1.0 : -1.0; }

    /// Uniform on [-a, a]. Consumes one uniform.
    double uniform_symmetric(double a) { return a * (2.0 * uniform_unit() - 1.0); }

private:
    static constexpr std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }
    std::uint64_t state_[4];
};

using Rng = Xoshiro256PlusPlus;

}  // namespace svtail
