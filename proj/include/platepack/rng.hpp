#pragma once

#include <cstdint>
#include <vector>

namespace platepack {

/// SplitMix64. Self-contained so that shuffles are bit-identical across
/// platforms and standard libraries.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Unbiased draw from [0, bound) by rejection.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

private:
    std::uint64_t state_;
};

/// Stream derivation rule: the seed for iteration i is the (i+1)-th output
/// of a SplitMix64 started at the master seed. Independent iterations can
/// therefore be computed in any order, on any thread.
inline std::uint64_t iteration_seed(std::uint64_t master_seed, std::uint64_t iteration) {
    SplitMix64 z(master_seed + iteration * 0x9E3779B97F4A7C15ull);
    return z.next();
}

/// Fisher-Yates with the rejection draw above; every permutation equally
/// likely, identical output for identical seeds everywhere.
template <typename T>
void seeded_shuffle(std::vector<T>& values, SplitMix64& rng) {
    for (std::size_t i = values.size(); i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(rng.below(i));
        std::swap(values[i - 1], values[j]);
    }
}

} // namespace platepack
