#pragma once

#include <cstdint>
#include <random>

#include "schwarzkit/types.hpp"

namespace schwarz {

// splitmix64 finalizer; used to derive independent substreams.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Deterministic random source. mt19937_64 is fully specified by the
// standard; doubles are produced from raw bits, not through the
// implementation-defined std distributions, so streams are reproducible
// across platforms and compilers.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed), eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    // uniform in [0, 1)
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    int uniform_int(int lo, int hi) { // inclusive bounds
        return lo + static_cast<int>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    Complex on_circle() { return unit_circle(uniform(0.0, kTwoPi)); }

    // area-uniform in the disc of the given radius
    Complex in_disc(double radius) {
        double r = radius * std::sqrt(uniform());
        return std::polar(r, uniform(0.0, kTwoPi));
    }

    // uniform in the annulus lo <= |z| <= hi (radius-uniform, good enough here)
    Complex in_annulus(double lo, double hi) {
        return std::polar(uniform(lo, hi), uniform(0.0, kTwoPi));
    }

    // Independent substream; deterministic in (seed, index).
    Rng split(std::uint64_t index) const { return Rng(mix64(seed_ ^ mix64(index))); }

    std::uint64_t seed() const { return seed_; }

private:
    std::uint64_t seed_;
    std::mt19937_64 eng_;
};

} // namespace schwarz
