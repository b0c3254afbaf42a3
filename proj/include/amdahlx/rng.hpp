// Deterministic randomness helpers.
//
// All stochastic behavior in the library (fold shuffling, configuration
// sampling, measurement noise) routes through std::mt19937_64 with the
// explicit derivations below, so identical seeds give identical results on
// every run.  std::shuffle and the std distributions are implementation
// defined and are deliberately not used.

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

namespace amdahlx::rng {

/// SplitMix64 finalizer; used to derive independent streams from one seed.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

/// Unbiased draw from [0, bound) by rejection.
inline std::uint64_t bounded(std::mt19937_64& eng, std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t v;
    do {
        v = eng();
    } while (v >= limit);
    return v % bound;
}

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform01(std::mt19937_64& eng) {
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

/// Fisher-Yates permutation of 0..n-1.
inline std::vector<std::size_t> shuffled_indices(std::size_t n, std::uint64_t seed) {
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    std::mt19937_64 eng(seed);
    for (std::size_t i = n; i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(bounded(eng, i));
        std::swap(perm[i - 1], perm[j]);
    }
    return perm;
}

/// Standard normal draw via Box-Muller from an explicit engine.
inline double gaussian(std::mt19937_64& eng) {
    double u1;
    do {
        u1 = uniform01(eng);
    } while (u1 <= 0.0);
    const double u2 = uniform01(eng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

/// Gaussian(0, sigma) truncated to (-limit, limit), derived from (seed, index)
/// alone so draws are order independent across indices.
inline double truncated_gaussian(std::uint64_t seed, std::uint64_t index, double sigma,
                                 double limit = 0.5) {
    if (sigma == 0.0) return 0.0;
    std::mt19937_64 eng(splitmix64(splitmix64(seed) ^ splitmix64(index + 1)));
    double eps;
    do {
        eps = sigma * gaussian(eng);
    } while (!(eps > -limit && eps < limit));
    return eps;
}

} // namespace amdahlx::rng
