#pragma once

#include <array>
#include <cstdint>

namespace seqgini {

/// Identifies one reproducible substream of a master seed.
struct SeedSpec {
    std::uint64_t master_seed = 0;
    std::uint64_t stream_index = 0;
};

// xoshiro256++ (Blackman & Vigna, public domain reference implementation),
// seeded through splitmix64 so any 64-bit state expands to a full-period
// starting point. Bit-exact across platforms, unlike the standard-library
// distributions.
class Xoshiro256PlusPlus {
public:
    explicit Xoshiro256PlusPlus(std::uint64_t seed);

    std::uint64_t next();

    /// Uniform draw in the open interval (0, 1), 53-bit resolution.
    double uniform01();

    using result_type = std::uint64_t;
    static constexpr std::uint64_t min() { return 0; }
    static constexpr std::uint64_t max() { return ~0ull; }
    std::uint64_t operator()() { return next(); }

private:
    std::array<std::uint64_t, 4> state_;
};

using Rng = Xoshiro256PlusPlus;

/// Splitmix64 finalizer; also usable as a standalone 64 -> 64 bit mixer.
std::uint64_t splitmix64_mix(std::uint64_t x);

/// Deterministically derives the generator for one substream. Distinct
/// stream indices give statistically independent sequences.
Rng derive_stream(const SeedSpec& seed);
Rng derive_stream(std::uint64_t master_seed, std::uint64_t stream_index);

}  // namespace seqgini
