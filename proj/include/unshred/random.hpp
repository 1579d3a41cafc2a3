#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <random>
#include <string_view>
#include <vector>

namespace unshred {

// Deterministic cross-platform RNG helpers. std::mt19937_64 output is fully
// specified by the standard; the distributions are not, so bounded draws and
// shuffles are hand-rolled here.

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

// Mixes an arbitrary list of 64-bit values into a single seed.
inline std::uint64_t mix_seed(std::initializer_list<std::uint64_t> parts) {
    std::uint64_t state = 0x6a09e667f3bcc908ULL;
    for (std::uint64_t p : parts) {
        state ^= p;
        splitmix64(state);
    }
    return splitmix64(state);
}

inline std::mt19937_64 make_engine(std::uint64_t seed) { return std::mt19937_64(seed); }

// Uniform draw in [0, n) by rejection; unbiased and engine-portable.
inline std::uint64_t uniform_below(std::mt19937_64& eng, std::uint64_t n) {
    if (n <= 1) return 0;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x;
    do {
        x = eng();
    } while (x >= limit);
    return x % n;
}

inline double uniform_unit(std::mt19937_64& eng) {
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

inline bool bernoulli_bit(std::mt19937_64& eng) { return (eng() & 1ULL) != 0; }

// Standard normal via Box-Muller on explicit uniforms.
inline double gaussian(std::mt19937_64& eng) {
    double u1 = 0.0;
    do {
        u1 = uniform_unit(eng);
    } while (u1 <= 0.0);
    const double u2 = uniform_unit(eng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
}

// Fisher-Yates with explicit bounded draws.
template <typename T>
void deterministic_shuffle(std::vector<T>& v, std::mt19937_64& eng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(uniform_below(eng, i));
        std::swap(v[i - 1], v[j]);
    }
}

}  // namespace unshred
