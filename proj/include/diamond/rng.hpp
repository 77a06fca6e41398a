#pragma once

#include <cstdint>
#include <random>

namespace diamond {

/// Deterministic random source. std::mt19937_64 is fully specified by the
/// standard, and the uniform mappings below avoid std::uniform_*_distribution
/// (whose output is implementation-defined), so streams are identical across
/// platforms for a given seed.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) {
        const double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
        return lo + u * (hi - lo);
    }

    /// Uniform integer in [0, n). Modulo bias is irrelevant at the scales
    /// used here (n far below 2^32).
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    bool chance(std::uint32_t num, std::uint32_t den) { return next() % den < num; }

    /// Decorrelated child seed for trial t of a seeded audit.
    static std::uint64_t mix(std::uint64_t seed, std::uint64_t t) {
        std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (t + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

  private:
    std::mt19937_64 eng_;
};

}  // namespace diamond
