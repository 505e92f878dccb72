#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace elacnn {

// All randomness in the library flows through this wrapper. std::mt19937_64
// produces a portable bit stream, but the standard distributions do not, so
// the mappings from raw draws to floats / bounded ints are spelled out here
// and must not change: saved models and recorded training histories depend
// on them.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0, 1), 53 random bits.
    double next_double() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform float in [lo, hi), computed in double then rounded once.
    float next_float(float lo, float hi) {
        const double u = next_double();
        return static_cast<float>(static_cast<double>(lo) +
                                  u * (static_cast<double>(hi) - static_cast<double>(lo)));
    }

    /// Uniform integer in [0, n). n must be >= 1.
    std::uint64_t next_below(std::uint64_t n) { return engine_() % n; }

    /// Fisher-Yates shuffle with a pinned draw sequence.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(next_below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

/// Mixes two seeds into one (splitmix64 finalizer), used to derive per-epoch
/// and per-layer streams from a master seed.
inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
    std::uint64_t z = a + 0x9e3779b97f4a7c15ull * (b + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

}  // namespace elacnn
