#pragma once

#include <cstdint>
#include <stdexcept>

namespace gpmfix {

/// Deterministic splitmix64 generator. Reports must be reproducible across
/// implementations, so the generator is pinned here rather than delegated to
/// the standard library engines.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1).
    double uniform() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

private:
    std::uint64_t state_;
};

/// Sampling domain for the property checkers: a scalar box for points, a
/// strictly positive range for the metric parameter t, a sample count and a
/// seed. Identical (domain, seed) pairs produce identical sample streams.
struct Sampler {
    double point_lo = -10.0;
    double point_hi = 10.0;
    double t_lo = 0.01;
    double t_hi = 10.0;
    std::size_t count = 1000;
    std::uint64_t seed = 1;

    void validate() const {
        if (count == 0) throw std::invalid_argument("sampler: count must be >= 1");
        if (!(point_lo <= point_hi)) throw std::invalid_argument("sampler: empty point box");
        if (!(t_lo > 0.0 && t_lo <= t_hi)) throw std::invalid_argument("sampler: t range must be positive");
    }

    SplitMix64 rng() const { return SplitMix64(seed); }
};

}  // namespace gpmfix
