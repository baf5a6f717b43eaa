#include "schwarzkit/disc.hpp"

#include <array>
#include <cmath>

#include "schwarzkit/errors.hpp"

namespace schwarz {

Complex normalize_boundary(Complex z) {
    double m = std::abs(z);
    if (m == 0.0) throw Error(Error::Code::domain, "cannot normalize 0 onto the unit circle");
    return z / m;
}

MoebiusTransform::MoebiusTransform(double rotation_, Complex center_)
    : rotation(wrap_angle(rotation_)), center(center_) {
    if (std::abs(center_) >= 1.0)
        throw Error(Error::Code::domain, "Moebius center must lie in the open disc");
}

Complex MoebiusTransform::operator()(Complex z) const {
    return std::polar(1.0, rotation) * (z - center) / (1.0 - std::conj(center) * z);
}

Complex MoebiusTransform::derivative(Complex z) const {
    Complex d = 1.0 - std::conj(center) * z;
    return std::polar(1.0, rotation) * (1.0 - std::norm(center)) / (d * d);
}

MoebiusTransform compose(const MoebiusTransform& s, const MoebiusTransform& t) {
    // s(t(z)) with t = (theta1, a), s = (theta2, b):
    //   e^{i theta2} [(e^{i theta1} + b conj(a)) z - (e^{i theta1} a + b)]
    //   / [(1 + conj(b) a e^{i theta1}) - (conj(a) + conj(b) e^{i theta1}) z]
    // Factor coefficient N = e^{i theta1} + b conj(a); |N| >= 1 - |a||b| > 0,
    // and the denominator coefficient equals e^{-i theta1} conj(N), so the
    // composite is again canonical with unimodular rotation factor.
    const Complex a = t.center, b = s.center;
    const Complex e1 = std::polar(1.0, t.rotation);
    const Complex n = e1 + b * std::conj(a);
    const Complex c = (e1 * a + b) / n;
    const Complex lambda = std::polar(1.0, s.rotation) * e1 * n / std::conj(n);
    return MoebiusTransform(std::arg(lambda), c);
}

MoebiusTransform inverse(const MoebiusTransform& t) {
    // (theta, a)^{-1} = (-theta, -e^{i theta} a)
    return MoebiusTransform(-t.rotation, -std::polar(1.0, t.rotation) * t.center);
}

bool pointwise_equal(const MoebiusTransform& s, const MoebiusTransform& t, double tol) {
    static const std::array<Complex, 3> probes = {Complex(0.0, 0.0), Complex(0.5, 0.0), Complex(0.0, 0.5)};
    for (Complex p : probes)
        if (std::abs(s(p) - t(p)) > tol) return false;
    return true;
}

double pseudohyperbolic_distance(Complex a, Complex b) {
    if (std::abs(a) >= 1.0 || std::abs(b) >= 1.0)
        throw Error(Error::Code::domain, "pseudohyperbolic distance needs interior points");
    return std::abs((b - a) / (1.0 - std::conj(a) * b));
}

} // namespace schwarz
