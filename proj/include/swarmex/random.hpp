#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string_view>

namespace swarmex {

// Deterministic splitmix64 stream. Used everywhere instead of the standard
// distributions so that identical seeds produce identical byte-level output
// on every platform and standard library.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform double in [0, 1).
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform double in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Box-Muller without state caching: every call consumes exactly two
    // uniform draws, which keeps replay independent of call interleaving.
    double normal(double mean, double stddev) {
        double u1 = 1.0 - uniform01();  // (0, 1]
        double u2 = uniform01();
        double r = std::sqrt(-2.0 * std::log(u1));
        return mean + stddev * r * std::cos(kTau * u2);
    }

    int uniform_int(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    static constexpr double kTau = 2.0 * std::numbers::pi;
    std::uint64_t state_;
};

// Derives an independent named substream from a master seed. Streams are
// keyed by (tag, index) so that, e.g., adding a robot does not perturb the
// draws of existing robots.
inline std::uint64_t derive_seed(std::uint64_t master, std::string_view tag, std::uint64_t index) {
    std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a over the tag bytes
    for (char c : tag) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    h ^= master + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
    h ^= index * 0xBF58476D1CE4E5B9ULL;
    // one splitmix scramble so nearby (master, index) pairs decorrelate
    h = (h ^ (h >> 30)) * 0xBF58476D1CE4E5B9ULL;
    h = (h ^ (h >> 27)) * 0x94D049BB133111EBULL;
    return h ^ (h >> 31);
}

inline RandomStream derive_stream(std::uint64_t master, std::string_view tag, std::uint64_t index = 0) {
    return RandomStream(derive_seed(master, tag, index));
}

}  // namespace swarmex
