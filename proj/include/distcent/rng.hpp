#pragma once

#include <cstdint>
#include <random>

namespace distcent {

/// Reproducible random source.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. Standard distributions are implementation-defined, so every
/// draw is derived from raw 64-bit outputs here instead:
///  - uniform_real: top 53 bits scaled by 2^-53, giving [0, 1);
///  - uniform_below(b): rejection of raw outputs at or above the largest
///    multiple of b, then modulo b.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    double uniform_real();
    /// Uniform on [0, bound). bound must be positive.
    std::uint64_t uniform_below(std::uint64_t bound);
    /// Uniform integer on [lo, hi].
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);
    bool bernoulli(double p) { return uniform_real() < p; }

private:
    std::mt19937_64 engine_;
};

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Seed for stream `index` under `base`; distinct indices give decorrelated seeds.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) noexcept;

}  // namespace distcent
