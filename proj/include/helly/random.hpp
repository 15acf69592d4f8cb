#pragma once

#include <cstdint>
#include <random>

#include "helly/scalar.hpp"

namespace helly {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Seeded generator with draws defined here rather than by the standard
/// distributions, whose output is implementation-specific.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, n), n > 0.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v;
        do v = engine_(); while (v >= limit);
        return v % n;
    }

    /// Uniform in [lo, hi].
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    /// k / 2^bits with k uniform in [0, 2^bits].
    Rational unit_rational(unsigned bits = 16) {
        const std::int64_t den = std::int64_t{1} << bits;
        return Rational(uniform_int(0, den), den);
    }

    /// Uniform rational in [lo, hi] on a grid of 2^bits + 1 points.
    Rational rational_in(const Rational &lo, const Rational &hi, unsigned bits = 16) {
        return lo + (hi - lo) * unit_rational(bits);
    }

    double unit_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool coin() { return (next() >> 63) != 0; }

private:
    std::mt19937_64 engine_;
};

}  // namespace helly
