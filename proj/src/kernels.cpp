#include "schwarzkit/kernels.hpp"

#include <atomic>
#include <cmath>

namespace schwarz {

namespace {
std::atomic<Exec> g_default_exec{Exec::parallel};
}

Exec default_exec() { return g_default_exec.load(std::memory_order_relaxed); }
void set_default_exec(Exec mode) { g_default_exec.store(mode, std::memory_order_relaxed); }

Extreme min_of(std::span<const double> xs) {
    Extreme best{xs.empty() ? 0.0 : xs[0], 0};
    for (std::size_t i = 1; i < xs.size(); ++i)
        if (xs[i] < best.value) best = {xs[i], i};
    return best;
}

Extreme max_of(std::span<const double> xs) {
    Extreme best{xs.empty() ? 0.0 : xs[0], 0};
    for (std::size_t i = 1; i < xs.size(); ++i)
        if (xs[i] > best.value) best = {xs[i], i};
    return best;
}

std::vector<Complex> disc_grid(std::size_t rings, std::size_t angles, double max_radius) {
    std::vector<Complex> pts;
    pts.reserve(rings * angles);
    for (std::size_t r = 0; r < rings; ++r) {
        double radius = max_radius * static_cast<double>(r + 1) / static_cast<double>(rings);
        for (std::size_t k = 0; k < angles; ++k)
            pts.push_back(std::polar(radius, kTwoPi * static_cast<double>(k) / static_cast<double>(angles)));
    }
    return pts;
}

std::vector<Complex> annulus_grid(double inner_radius, double outer_radius, std::size_t rings,
                                  std::size_t angles) {
    std::vector<Complex> pts;
    pts.reserve(rings * angles);
    for (std::size_t r = 0; r < rings; ++r) {
        double radius =
            rings == 1 ? inner_radius
                       : inner_radius + (outer_radius - inner_radius) * static_cast<double>(r) /
                                            static_cast<double>(rings - 1);
        for (std::size_t k = 0; k < angles; ++k)
            pts.push_back(std::polar(radius, kTwoPi * static_cast<double>(k) / static_cast<double>(angles)));
    }
    return pts;
}

} // namespace schwarz
