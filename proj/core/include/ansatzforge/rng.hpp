#pragma once

#include <cstdint>

namespace ansatzforge {

/// Splittable counter-based generator (splitmix64 core).
///
/// All stochastic operations take an Rng explicitly; there is no global
/// randomness anywhere in the library. Identical seeds give bit-identical
/// streams on every platform, which is what makes sampled tests and saved
/// run traces reproducible. split() derives an independent child stream.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1) with 53 bits of entropy.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) {
        return lo + (hi - lo) * next_double();
    }

    /// Uniform integer in [0, n).
    std::uint64_t next_below(std::uint64_t n) {
        return next_u64() % n;
    }

    /// Derive an independent child generator.
    Rng split() { return Rng(next_u64() ^ 0xd1b54a32d192ed03ULL); }

private:
    std::uint64_t state_;
};

} // namespace ansatzforge
