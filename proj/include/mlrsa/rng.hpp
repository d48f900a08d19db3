#pragma once

#include <cstdint>
#include <random>

namespace mlrsa {

/// Seeded random stream.  (seed, stream) fully determines the sequence, so
/// replications can draw from independent streams (stream = replication
/// index) and produce identical results regardless of thread count or
/// execution order.
///
/// All draw helpers are implemented directly on top of the raw engine output
/// (no std::*_distribution), so sequences are reproducible across standard
/// library implementations as well.
class Rng {
public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

    /// Uniform double in [0, 1), 53-bit resolution.
    double uniform();

    /// Uniform double in [a, b).
    double uniform(double a, double b);

    /// Exponential variate with the given rate (mean 1/rate).
    double exponential(double rate);

    /// Uniform integer in [0, n), n >= 1, rejection-sampled (no modulo bias).
    std::uint64_t uniform_int(std::uint64_t n);

    /// Raw 64-bit engine output.
    std::uint64_t next_u64() { return eng_(); }

private:
    std::mt19937_64 eng_;
};

}  // namespace mlrsa
