#pragma once

// Counter-based uniform generator.
//
// Value i of the stream keyed by k is SplitMix64's output for state
// k + (i+1)·γ, i.e. exactly what a sequential SplitMix64 seeded with k
// would emit as its i-th draw. Because each value depends only on
// (k, i), any partition of the index range across threads reproduces
// the serial stream bit for bit.

#include <cstdint>
#include <initializer_list>

namespace uf {

inline constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;

constexpr std::uint64_t splitmix64_mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

class CounterRng {
public:
    constexpr explicit CounterRng(std::uint64_t key) noexcept : key_(key) {}

    constexpr std::uint64_t bits(std::uint64_t index) const noexcept {
        return splitmix64_mix(key_ + (index + 1) * kGoldenGamma);
    }

    /// Uniform on the open interval (0,1): 53 random bits centred in
    /// their cell, so neither endpoint is reachable.
    constexpr double uniform(std::uint64_t index) const noexcept {
        return (static_cast<double>(bits(index) >> 11) + 0.5) * 0x1.0p-53;
    }

    constexpr std::uint64_t key() const noexcept { return key_; }

private:
    std::uint64_t key_;
};

/// Stateless hash of a tuple of integers into a stream key.
constexpr std::uint64_t derive_key(std::initializer_list<std::uint64_t> parts) noexcept {
    std::uint64_t h = 0x6A09E667F3BCC909ULL;
    for (std::uint64_t p : parts) h = splitmix64_mix(h ^ splitmix64_mix(p + kGoldenGamma));
    return h;
}

}  // namespace uf
