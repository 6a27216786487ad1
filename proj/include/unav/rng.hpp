#pragma once

#include "unav/rational.hpp"

#include <cstdint>
#include <random>

namespace unav {

// One splitmix64 step. Used to mix seeds, never as the main generator.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Stable per-(cell, trial) seed derivation for sweeps and similar grids.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b) {
    std::uint64_t state = base;
    std::uint64_t mixed = splitmix64(state);
    state = mixed ^ a;
    mixed = splitmix64(state);
    state = mixed ^ b;
    return splitmix64(state);
}

// Seeded generator with exact-rational Bernoulli draws. mt19937_64 output is
// fully specified by the standard, so identical seeds reproduce identical
// streams on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform over [0, bound) via the multiply-shift reduction (no rejection
    // loop, so consumption per call is fixed at one engine step).
    std::uint64_t below(std::uint64_t bound) {
        unsigned __int128 wide = static_cast<unsigned __int128>(next()) * bound;
        return static_cast<std::uint64_t>(wide >> 64);
    }

    // True with probability round(p * 2^64) / 2^64, compared exactly.
    bool bernoulli(const Rat& p) {
        if (p <= 0) {
            next();
            return false;
        }
        if (p >= 1) {
            next();
            return true;
        }
        BigInt draw(next());
        return draw * denominator(p) < numerator(p) * ipow(BigInt(2), 64);
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace unav
