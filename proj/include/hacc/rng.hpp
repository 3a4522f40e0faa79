#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace hacc {

/// Reproducibility contract for every randomized routine in the engine:
/// mt19937-64 streams (fully specified by the standard), sub-seeds derived
/// with the splitmix64 finalizer, integer draws by modulo rejection and
/// subset draws by partial Fisher-Yates. Same seed, same results, on every
/// platform. The identifier below is recorded in report metadata.
inline constexpr const char* rng_contract = "mt19937-64/splitmix64-subseeds/fisher-yates";

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Independent stream seed for grid point / trial `index` under a master seed.
inline std::uint64_t derive_subseed(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(seed ^ splitmix64(index + 1));
}

/// Uniform integer in [0, n) by rejection, avoiding the implementation-defined
/// std::uniform_int_distribution.
inline std::uint64_t uniform_below(std::mt19937_64& gen, std::uint64_t n) {
    const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % n;
    std::uint64_t x;
    do {
        x = gen();
    } while (x >= limit);
    return x % n;
}

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform_unit(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

/// First `m` elements of a Fisher-Yates shuffle of 0..n-1: a uniformly random
/// m-subset, in draw order.
inline std::vector<std::size_t> sample_without_replacement(std::mt19937_64& gen,
                                                           std::size_t n, std::size_t m) {
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    for (std::size_t i = 0; i < m && i < n; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(uniform_below(gen, n - i));
        std::swap(idx[i], idx[j]);
    }
    idx.resize(m < n ? m : n);
    return idx;
}

}  // namespace hacc
