#pragma once

#include <complex>
#include <numbers>

namespace schwarz {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

inline Complex unit_circle(double theta) { return std::polar(1.0, theta); }

// Wraps an angle into [0, 2*pi).
inline double wrap_angle(double theta) {
    double t = std::fmod(theta, kTwoPi);
    if (t < 0.0) t += kTwoPi;
    // fmod can round up to exactly 2*pi for tiny negative inputs
    if (t >= kTwoPi) t -= kTwoPi;
    return t;
}

inline bool is_interior(Complex z, double tol = 0.0) {
    return std::abs(z) < 1.0 - tol;
}

// Projects z onto the unit circle. Input must be nonzero.
Complex normalize_boundary(Complex z);

} // namespace schwarz
