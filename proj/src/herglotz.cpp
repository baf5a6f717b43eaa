#include "schwarzkit/herglotz.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "schwarzkit/errors.hpp"

namespace schwarz {

BoundaryMeasure::BoundaryMeasure(std::vector<Atom> raw_atoms) {
    for (Atom& a : raw_atoms) {
        if (a.mass < 0.0) throw Error(Error::Code::bad_input, "measure atom with negative mass");
        a.angle = wrap_angle(a.angle);
    }
    std::sort(raw_atoms.begin(), raw_atoms.end(),
              [](const Atom& x, const Atom& y) { return x.angle < y.angle; });
    for (const Atom& a : raw_atoms) {
        if (!atoms.empty() && std::abs(atoms.back().angle - a.angle) <= 1e-12)
            atoms.back().mass += a.mass;
        else
            atoms.push_back(a);
    }
    // angles 2*pi - eps and 0 are the same atom
    if (atoms.size() > 1 && atoms.back().angle >= kTwoPi - 1e-12 && atoms.front().angle <= 1e-12) {
        atoms.front().mass += atoms.back().mass;
        atoms.pop_back();
    }
}

double BoundaryMeasure::total_mass() const {
    double m = 0.0;
    for (const Atom& a : atoms) m += a.mass;
    return m;
}

Complex herglotz_transform(const HerglotzData& h, Complex z) {
    if (std::abs(z) >= 1.0)
        throw Error(Error::Code::domain, "Herglotz transform defined strictly inside the disc");
    Complex sum = 0.0;
    for (const auto& a : h.measure.atoms) {
        Complex w = unit_circle(a.angle);
        sum += a.mass * (w + z) / (w - z);
    }
    return sum / kTwoPi + Complex(0.0, h.constant_im);
}

Complex herglotz_transform_derivative(const HerglotzData& h, Complex z) {
    if (std::abs(z) >= 1.0)
        throw Error(Error::Code::domain, "Herglotz transform defined strictly inside the disc");
    Complex sum = 0.0;
    for (const auto& a : h.measure.atoms) {
        Complex w = unit_circle(a.angle);
        Complex d = w - z;
        sum += a.mass * 2.0 * w / (d * d);
    }
    return sum / kTwoPi;
}

Complex cayley_disc_to_halfplane(Complex phi) {
    if (std::abs(1.0 - phi) < 1e-14)
        throw Error(Error::Code::domain, "Cayley transform singular at phi = 1");
    return (1.0 + phi) / (1.0 - phi);
}

Complex cayley_halfplane_to_disc(Complex g) {
    if (std::abs(g + 1.0) < 1e-14)
        throw Error(Error::Code::domain, "inverse Cayley transform singular at g = -1");
    return (g - 1.0) / (g + 1.0);
}

MomentSequence moments_of_measure(const BoundaryMeasure& m, int highest) {
    MomentSequence s;
    s.values.reserve(static_cast<std::size_t>(highest) + 1);
    for (int n = 0; n <= highest; ++n) {
        Complex v = 0.0;
        for (const auto& a : m.atoms) v += a.mass * std::polar(1.0, -n * a.angle);
        s.values.push_back(v / kTwoPi);
    }
    return s;
}

RecoveredMoments moments_from_map(std::span<const Complex> g_taylor) {
    if (g_taylor.empty()) throw Error(Error::Code::bad_input, "empty Taylor data");
    RecoveredMoments out;
    out.constant_im = g_taylor[0].imag();
    out.moments.values.push_back(Complex(g_taylor[0].real(), 0.0));
    for (std::size_t n = 1; n < g_taylor.size(); ++n)
        out.moments.values.push_back(g_taylor[n] / 2.0);
    return out;
}

namespace {

double toeplitz_min_eigenvalue(const MomentSequence& s) {
    const int n = static_cast<int>(s.size());
    Eigen::MatrixXcd t(n, n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            int d = j - k;
            t(j, k) = d >= 0 ? s.values[static_cast<std::size_t>(d)]
                             : std::conj(s.values[static_cast<std::size_t>(-d)]);
        }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(t, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

MomentSequence shifted(const MomentSequence& s, double t) {
    MomentSequence r = s;
    for (Complex& v : r.values) v -= t;
    return r;
}

} // namespace

PsdVerdict herglotz_positivity(const MomentSequence& s) {
    if (s.size() == 0) throw Error(Error::Code::bad_input, "empty moment sequence");
    double min_eig = toeplitz_min_eigenvalue(s);
    return PsdVerdict{min_eig >= -1e-10 * s.mass0(), min_eig};
}

Delta0Split decompose_delta0(const MomentSequence& s) {
    if (s.size() < 2) throw Error(Error::Code::bad_input, "need at least two moments");
    // Feasibility is monotone in t: mu_hat - t'*1 = (mu_hat - t*1) + (t-t')*1
    // and the all-ones Toeplitz matrix is PSD. The PSD floor stays relative
    // to the input's mu_hat(0) so that rounding noise near t = mass0 does not
    // stall the bisection.
    const double floor = -1e-10 * s.mass0();
    auto feasible = [&](double t) { return toeplitz_min_eigenvalue(shifted(s, t)) >= floor; };
    if (!feasible(0.0))
        throw Error(Error::Code::not_psd, "decompose_delta0 requires a PSD moment sequence");
    double lo = 0.0, hi = s.mass0() + 1e-9;
    if (feasible(hi)) {
        lo = hi;
    } else {
        while (hi - lo > 1e-10) {
            double mid = 0.5 * (lo + hi);
            (feasible(mid) ? lo : hi) = mid;
        }
    }
    return Delta0Split{lo, shifted(s, lo)};
}

} // namespace schwarz
