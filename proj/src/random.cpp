#include "seqgini/random.hpp"

#include <bit>

namespace seqgini {

namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ull;

struct SplitMix64 {
    std::uint64_t state;

    std::uint64_t next() {
        std::uint64_t z = (state += kGolden);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
};

}  // namespace

std::uint64_t splitmix64_mix(std::uint64_t x) {
    SplitMix64 sm{x};
    return sm.next();
}

Xoshiro256PlusPlus::Xoshiro256PlusPlus(std::uint64_t seed) {
    SplitMix64 sm{seed};
    for (auto& word : state_) {
        word = sm.next();
    }
}

std::uint64_t Xoshiro256PlusPlus::next() {
    const std::uint64_t result = std::rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;

    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = std::rotl(state_[3], 45);

    return result;
}

double Xoshiro256PlusPlus::uniform01() {
    // 53 high bits, offset by half an ulp so 0 is never returned.
    return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
}

Rng derive_stream(const SeedSpec& seed) {
    // Finalize the stream index before combining, so consecutive indices
    // land on unrelated seeds; splitmix in the constructor does the rest.
    return Rng(seed.master_seed ^ splitmix64_mix(seed.stream_index + kGolden));
}

Rng derive_stream(std::uint64_t master_seed, std::uint64_t stream_index) {
    return derive_stream(SeedSpec{master_seed, stream_index});
}

}  // namespace seqgini
