#pragma once

// Test-only oracles, independent of the library's implementation paths.

#include <vector>

#include "schwarzkit/types.hpp"

namespace oracles {

using schwarz::Complex;

// central finite difference, step h
template <typename Fn>
Complex finite_difference(Fn&& f, Complex z, double h = 1e-5) {
    return (f(z + Complex(h, 0.0)) - f(z - Complex(h, 0.0))) / (2.0 * h);
}

// mu_hat(n) by direct summation over (angle, mass) pairs
inline Complex moment_by_summation(const std::vector<std::pair<double, double>>& atoms, int n) {
    Complex sum = 0.0;
    for (const auto& [angle, mass] : atoms) sum += mass * std::polar(1.0, -n * angle);
    return sum / schwarz::kTwoPi;
}

// naive one-variable truncated polynomial arithmetic (ascending coefficients)
inline std::vector<Complex> poly_mul_truncated(const std::vector<Complex>& a,
                                               const std::vector<Complex>& b, std::size_t degree) {
    std::vector<Complex> out(degree + 1, Complex(0.0, 0.0));
    for (std::size_t i = 0; i < a.size() && i <= degree; ++i)
        for (std::size_t j = 0; j < b.size() && i + j <= degree; ++j) out[i + j] += a[i] * b[j];
    return out;
}

// truncated composition a(b(z)), constant term of b must vanish
inline std::vector<Complex> poly_compose_truncated(const std::vector<Complex>& a,
                                                   const std::vector<Complex>& b,
                                                   std::size_t degree) {
    std::vector<Complex> out(degree + 1, Complex(0.0, 0.0));
    std::vector<Complex> power = {Complex(1.0, 0.0)};
    for (std::size_t k = 0; k < a.size() && k <= degree; ++k) {
        for (std::size_t i = 0; i < power.size(); ++i) out[i] += a[k] * power[i];
        power = poly_mul_truncated(power, b, degree);
    }
    return out;
}

} // namespace oracles
