#include "schwarzkit/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "schwarzkit/errors.hpp"
#include "schwarzkit/kernels.hpp"

namespace schwarz {

std::vector<double> radial_schedule(int j_first, int j_last) {
    std::vector<double> t;
    for (int j = j_first; j <= j_last; ++j) t.push_back(1.0 - std::ldexp(1.0, -j));
    return t;
}

Extrapolated richardson_limit(std::span<const Complex> values, int depth) {
    std::vector<Complex> row(values.begin(), values.end());
    Complex previous = row.back();
    for (int m = 1; m <= depth && row.size() > 1; ++m) {
        previous = row.back();
        const double factor = std::ldexp(1.0, m); // 2^m
        std::vector<Complex> next(row.size() - 1);
        for (std::size_t j = 0; j + 1 < row.size(); ++j)
            next[j] = (factor * row[j + 1] - row[j]) / (factor - 1.0);
        row = std::move(next);
    }
    return Extrapolated{row.back(), std::abs(row.back() - previous)};
}

Extrapolated radial_limit(const ComplexFn& f, Complex b) {
    b = normalize_boundary(b);
    std::vector<Complex> values;
    for (double t : radial_schedule(4, 20)) values.push_back(f(t * b));
    Extrapolated e = richardson_limit(values);
    if (e.error_estimate > 1e-4)
        throw Error(Error::Code::non_convergent, "radial limit did not converge");
    return e;
}

Extrapolated radial_limit(const FunctionSpec& f, Complex b) {
    return radial_limit([&](Complex z) { return f(z); }, b);
}

double angular_derivative(const ComplexFn& f, Complex b) {
    b = normalize_boundary(b);
    Extrapolated limit = radial_limit(f, b);
    if (std::abs(std::abs(limit.value) - 1.0) > 1e-6)
        throw Error(Error::Code::not_unimodular_limit, "radial limit is not on the unit circle");
    std::vector<Complex> quotients;
    for (double t : radial_schedule(4, 20))
        quotients.push_back((f(t * b) - limit.value) / (t * b - b));
    Extrapolated e = richardson_limit(quotients);
    if (e.error_estimate > 1e-4)
        throw Error(Error::Code::non_convergent, "difference quotients did not converge");
    return std::abs(e.value);
}

double angular_derivative(const FunctionSpec& f, Complex b) {
    return angular_derivative([&](Complex z) { return f(z); }, b);
}

bool ContactFit::at_least(double threshold) const {
    return std::isinf(order) || order >= threshold;
}

ContactFit contact_order(const ComplexFn& f, const ComplexFn& reference, Complex b) {
    b = normalize_boundary(b);
    std::vector<double> log_h, log_d;
    for (double t : radial_schedule(6, 16)) {
        Complex z = t * b;
        double d = std::abs(f(z) - reference(z));
        if (d >= 1e-13) { // below that the difference is rounding noise
            log_h.push_back(std::log(1.0 - t));
            log_d.push_back(std::log(d));
        }
    }
    if (log_h.size() < 2)
        return ContactFit{std::numeric_limits<double>::infinity(), 0.0, 0.0};
    const double n = static_cast<double>(log_h.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < log_h.size(); ++i) {
        mx += log_h[i];
        my += log_d[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < log_h.size(); ++i) {
        sxx += (log_h[i] - mx) * (log_h[i] - mx);
        sxy += (log_h[i] - mx) * (log_d[i] - my);
    }
    ContactFit fit;
    fit.order = sxy / sxx;
    const double intercept = my - fit.order * mx;
    fit.coefficient_modulus = std::exp(intercept);
    double ss = 0.0;
    for (std::size_t i = 0; i < log_h.size(); ++i) {
        double r = log_d[i] - (fit.order * log_h[i] + intercept);
        ss += r * r;
    }
    fit.residual = std::sqrt(ss / n);
    return fit;
}

ContactFit contact_order(const FunctionSpec& f, const FunctionSpec& reference, Complex b) {
    return contact_order([&](Complex z) { return f(z); }, [&](Complex z) { return reference(z); }, b);
}

namespace {

double adaptive_simpson(const std::function<double(double)>& g, double a, double b, double fa,
                        double fm, double fb, double whole, double tol, int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = g(lm), frm = g(rm);
    double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return adaptive_simpson(g, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
           adaptive_simpson(g, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

} // namespace

double arc_image_length(const FunctionSpec& blaschke_product, double theta1, double theta2) {
    if (!std::holds_alternative<FunctionSpec::Blaschke>(blaschke_product.node()))
        throw Error(Error::Code::bad_input, "arc_image_length needs a Blaschke product");
    double s = theta2 - theta1;
    if (s < 0.0 || s > kTwoPi + 1e-12)
        throw Error(Error::Code::bad_input, "arc must satisfy 0 <= theta2 - theta1 <= 2*pi");
    if (s == 0.0) return 0.0;
    auto speed = [&](double t) { return std::abs(blaschke_product.derivative(unit_circle(t))); };
    // seed Simpson on a handful of panels so oscillatory |B'| is not missed
    const int panels = 16;
    double total = 0.0;
    for (int k = 0; k < panels; ++k) {
        double a = theta1 + s * k / panels;
        double b = theta1 + s * (k + 1) / panels;
        double fa = speed(a), fb = speed(b), fm = speed(0.5 * (a + b));
        double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
        total += adaptive_simpson(speed, a, b, fa, fm, fb, whole, 1e-9 / panels, 40);
    }
    return total;
}

HopfReport hopf_check(const ComplexFn& analytic, Complex p, double tangent_radius) {
    p = normalize_boundary(p);
    const double r = tangent_radius;
    if (r <= 0.0 || r > 1.0)
        throw Error(Error::Code::bad_input, "tangent ball radius must be in (0, 1]");
    auto u = [&](Complex z) { return analytic(z).real(); };
    if (std::abs(u(p)) > 1e-10)
        throw Error(Error::Code::not_vanishing_at_p, "u(P) != 0");
    const Complex center = (1.0 - r) * p;
    // nonnegativity on the tangent ball, 10^3 samples (kept off the rim where u(P)=0)
    std::vector<Complex> ball_pts = disc_grid(25, 40, 0.999 * r);
    std::vector<double> vals = map_indexed<double>(ball_pts.size(), [&](std::size_t i) {
        return u(center + ball_pts[i]);
    });
    Extreme worst = min_of(vals);
    if (worst.value < -1e-10)
        throw Error(Error::Code::not_nonnegative, "u changes sign on the tangent ball");
    // Harnack floor from the half-radius circle
    std::vector<double> half =
        map_indexed<double>(720, [&](std::size_t i) {
            return u(center + std::polar(0.5 * r, kTwoPi * static_cast<double>(i) / 720.0));
        });
    const double c = min_of(half).value;
    HopfReport report;
    report.harnack_constant = c / r;
    // one-sided inward differences (u(P) - u((1-h)P)) / h, h = 2^{-j}
    std::vector<Complex> quotients;
    for (int j = 2; j <= 14; ++j) {
        double h = std::ldexp(1.0, -j);
        quotients.push_back(Complex((u(p) - u((1.0 - h) * p)) / h, 0.0));
    }
    report.normal_derivative = richardson_limit(quotients).value.real();
    report.strictly_negative = report.normal_derivative <= -0.5 * report.harnack_constant;
    return report;
}

HopfReport hopf_check(const FunctionSpec& analytic, Complex p, double tangent_radius) {
    return hopf_check([&](Complex z) { return analytic(z); }, p, tangent_radius);
}

CollarReport collar_positivity(const ComplexFn& analytic, double collar_inner_radius,
                               std::size_t samples) {
    if (collar_inner_radius <= 0.0 || collar_inner_radius >= 1.0)
        throw Error(Error::Code::bad_input, "collar radius must be in (0, 1)");
    auto u = [&](Complex z) { return analytic(z).real(); };
    std::size_t angles = std::max<std::size_t>(samples / 10, 8);
    std::vector<Complex> collar = annulus_grid(collar_inner_radius, 1.0 - 1e-3, 10, angles);
    std::vector<double> collar_vals =
        map_indexed<double>(collar.size(), [&](std::size_t i) { return u(collar[i]); });
    if (min_of(collar_vals).value < -1e-10)
        throw Error(Error::Code::collar_hypothesis_violated, "u < 0 on the collar");
    std::vector<Complex> grid = disc_grid(33, 30, 0.999);
    std::vector<double> vals =
        map_indexed<double>(grid.size(), [&](std::size_t i) { return u(grid[i]); });
    Extreme m = min_of(vals);
    return CollarReport{m.value, grid[m.index], m.value >= -1e-10};
}

} // namespace schwarz
