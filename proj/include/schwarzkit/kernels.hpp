#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "schwarzkit/types.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

// Data-parallel scan kernels. Every kernel fills an index-addressed buffer
// and reduces serially afterwards, so the OpenMP path is bit-identical to
// the serial reference regardless of thread count or schedule. The serial
// path is kept as the reference implementation for tests and for the
// kernel benchmark.

namespace schwarz {

enum class Exec { serial, parallel };

Exec default_exec();
void set_default_exec(Exec mode);

// out[i] = fn(i). fn must be pure.
template <typename T, typename Fn>
void map_indexed(std::span<T> out, Fn&& fn, Exec mode = default_exec()) {
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(out.size());
    if (mode == Exec::parallel) {
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = fn(static_cast<std::size_t>(i));
    } else {
        for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = fn(static_cast<std::size_t>(i));
    }
}

template <typename T, typename Fn>
std::vector<T> map_indexed(std::size_t n, Fn&& fn, Exec mode = default_exec()) {
    std::vector<T> out(n);
    map_indexed<T>(std::span<T>(out), std::forward<Fn>(fn), mode);
    return out;
}

struct Extreme {
    double value = 0.0;
    std::size_t index = 0;
};

// Serial reductions; first occurrence wins ties, so results are deterministic.
Extreme min_of(std::span<const double> xs);
Extreme max_of(std::span<const double> xs);

// max_i |f(radius * e^{2*pi*i/n})| over n equispaced angles.
struct CircleScan {
    double max_modulus = 0.0;
    Complex argmax;
};
template <typename Fn>
CircleScan max_modulus_on_circle(Fn&& f, double radius, std::size_t n, Exec mode = default_exec()) {
    std::vector<double> moduli = map_indexed<double>(
        n,
        [&](std::size_t i) {
            return std::abs(f(std::polar(radius, kTwoPi * static_cast<double>(i) / static_cast<double>(n))));
        },
        mode);
    Extreme m = max_of(moduli);
    return CircleScan{m.value, std::polar(radius, kTwoPi * static_cast<double>(m.index) / static_cast<double>(n))};
}

// Deterministic interior grids: rings x angles, radii strictly inside (0, max_radius].
std::vector<Complex> disc_grid(std::size_t rings, std::size_t angles, double max_radius);
std::vector<Complex> annulus_grid(double inner_radius, double outer_radius, std::size_t rings, std::size_t angles);

} // namespace schwarz
