#ifndef COMMEVAL_CORE_RNG_HPP_
#define COMMEVAL_CORE_RNG_HPP_

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace commeval {

/// SplitMix64 step; used for seed derivation so that nearby seeds decorrelate.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    return h;
}

/// Per-run seed: mix(base_seed, detector_id, rep_index).
/// seed = splitmix64(splitmix64(base ^ fnv1a64(id)) ^ rep)
inline std::uint64_t mix_seed(std::uint64_t base, std::string_view id, std::uint64_t rep) {
    return splitmix64(splitmix64(base ^ fnv1a64(id)) ^ rep);
}

/// Deterministic RNG wrapper. mt19937_64 output is fixed by the standard;
/// the double and bounded-integer helpers below avoid std distributions,
/// whose algorithms are implementation-defined, so streams are stable
/// across platforms and standard libraries.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    /// Uniform double in [0, 1), 53 bits of precision.
    double next_double() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, bound). Rejection sampling, no modulo bias.
    std::uint64_t next_below(std::uint64_t bound) {
        if (bound <= 1) return 0;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do {
            x = eng_();
        } while (x >= limit);
        return x % bound;
    }

    /// Fisher-Yates shuffle with the portable bounded sampler.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(next_below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

  private:
    std::mt19937_64 eng_;
};

} // namespace commeval

#endif // COMMEVAL_CORE_RNG_HPP_
