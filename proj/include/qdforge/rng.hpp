#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace qdforge {

/// splitmix64 output function. For x = k * 0x9E3779B97F4A7C15 this reproduces
/// the published splitmix64 sequence, which the unit tests pin against known
/// vectors. Used as the seed mixer for stream splitting.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Stream-splitting rule. Every randomized stage of a run owns a child stream
/// derived from the run seed, so evaluation order and thread scheduling cannot
/// change any draw:
///
///   initial genotype i       -> RngStream(child_seed(seed, kStreamInit, i))
///   generation g, offspring b -> RngStream(child_seed(seed, kStreamOffspring, g, b))
///
/// Centroid construction takes its own seed (RunConfig::cvt_seed) directly so
/// the niche structure is shared across operators and run seeds.
inline std::uint64_t child_seed(std::uint64_t master, std::uint64_t tag,
                                std::uint64_t a = 0, std::uint64_t b = 0) {
    std::uint64_t h = mix64(master);
    h = mix64(h ^ tag);
    h = mix64(h ^ a);
    h = mix64(h ^ b);
    return h;
}

inline constexpr std::uint64_t kStreamInit = 0x696E6974ULL;       // "init"
inline constexpr std::uint64_t kStreamOffspring = 0x6F666673ULL;  // "offs"

/// Deterministic random stream. The engine is std::mt19937_64 (output sequence
/// fixed by the standard); the distribution transforms are pinned here because
/// std::normal_distribution and friends are implementation-defined:
///   uniform      (x >> 11) * 2^-53, in [0, 1)
///   normal       Marsaglia polar method, pairs cached per stream
///   exponential  -log(u) with u in (0, 1), strictly positive
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0, 1).
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Standard normal draw.
    double normal() {
        if (has_cached_normal_) {
            has_cached_normal_ = false;
            return cached_normal_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform() - 1.0;
            v = 2.0 * uniform() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double m = std::sqrt(-2.0 * std::log(s) / s);
        cached_normal_ = v * m;
        has_cached_normal_ = true;
        return u * m;
    }

    /// Exp(1) draw, always > 0 so cumulative crossover positions are strictly
    /// increasing.
    double exponential() {
        double u;
        do {
            u = uniform();
        } while (u == 0.0);
        return -std::log(u);
    }

    /// Uniform index in {0, ..., n-1}, n >= 1. Fixed-point multiply keeps the
    /// mapping branch-free and deterministic.
    std::size_t uniform_index(std::size_t n) {
        return static_cast<std::size_t>(
            (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

private:
    std::mt19937_64 engine_;
    double cached_normal_ = 0.0;
    bool has_cached_normal_ = false;
};

}  // namespace qdforge
