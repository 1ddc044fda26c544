#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

#include "framekit/rational.hpp"

namespace framekit {

/// Seeded generator with platform-independent bounded draws.
///
/// std::mt19937_64's output sequence is fixed by the standard, but the
/// std::uniform_*_distribution adaptors are not, so bounded integers are
/// produced here by rejection sampling on the raw 64-bit output.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : engine_(seed), seed_(seed) {}

    std::uint64_t seed() const { return seed_; }

    /// Uniform integer in [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        if (hi < lo) throw std::invalid_argument("empty sampling range");
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        if (span == 0) return static_cast<std::int64_t>(engine_());
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t draw;
        do {
            draw = engine_();
        } while (draw >= limit);
        return lo + static_cast<std::int64_t>(draw % span);
    }

    bool coin() { return uniform(0, 1) == 1; }

    /// d/q with d uniform in [-max_numerator, max_numerator], q in [1, max_denominator].
    Rational small_rational(std::int64_t max_numerator, std::int64_t max_denominator) {
        const std::int64_t d = uniform(-max_numerator, max_numerator);
        const std::int64_t q = uniform(1, max_denominator);
        return Rational(d, q);
    }

    Rational nonzero_rational(std::int64_t max_numerator, std::int64_t max_denominator) {
        Rational r;
        do {
            r = small_rational(max_numerator, max_denominator);
        } while (r.is_zero());
        return r;
    }

private:
    std::mt19937_64 engine_;
    std::uint64_t seed_;
};

}  // namespace framekit
