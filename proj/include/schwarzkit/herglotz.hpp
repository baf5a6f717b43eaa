#pragma once

#include <span>
#include <vector>

#include "schwarzkit/types.hpp"

namespace schwarz {

// Finite positive atomic measure on the circle, sum_k mass_k * delta_{angle_k}.
// Angles live in [0, 2*pi); atoms closer than 1e-12 are merged on construction.
struct BoundaryMeasure {
    struct Atom {
        double angle = 0.0;
        double mass = 0.0;
    };

    std::vector<Atom> atoms; // sorted by angle

    BoundaryMeasure() = default;
    explicit BoundaryMeasure(std::vector<Atom> raw_atoms);

    // 2*pi times the Dirac mass at angle 0
    static BoundaryMeasure dirac0() { return BoundaryMeasure({{0.0, kTwoPi}}); }

    double total_mass() const;
};

// Measure plus the imaginary constant of the half-plane representation.
struct HerglotzData {
    BoundaryMeasure measure;
    double constant_im = 0.0;
};

// g(z) = (1/2pi) sum_k m_k (e^{i t_k} + z)/(e^{i t_k} - z) + i*constant_im.
// Maps the open disc into the closed right half-plane. |z| < 1 required.
Complex herglotz_transform(const HerglotzData& h, Complex z);
Complex herglotz_transform_derivative(const HerglotzData& h, Complex z);

// Cayley pair between the disc and the right half-plane.
Complex cayley_disc_to_halfplane(Complex phi); // (1 + phi) / (1 - phi)
Complex cayley_halfplane_to_disc(Complex g);   // (g - 1) / (g + 1)

// values[n] = mu_hat(n) = (1/2pi) Int e^{-i n t} dmu(t), n = 0..N.
struct MomentSequence {
    std::vector<Complex> values;

    std::size_t size() const { return values.size(); }
    double mass0() const { return values.empty() ? 0.0 : values[0].real(); }
};

MomentSequence moments_of_measure(const BoundaryMeasure& m, int highest);

// Inverts the kernel expansion: c_0 = mu_hat(0) + i*C, c_n = 2 mu_hat(n).
struct RecoveredMoments {
    MomentSequence moments;
    double constant_im = 0.0;
};
RecoveredMoments moments_from_map(std::span<const Complex> g_taylor);

// Herglotz criterion: the (N+1)x(N+1) Toeplitz matrix T[j][k] = mu_hat(j-k)
// is PSD exactly for Fourier-Stieltjes sequences of positive measures.
// Verdict is tolerance-qualified: PSD iff lambda_min >= -1e-10 * mu_hat(0).
struct PsdVerdict {
    bool psd = false;
    double min_eigenvalue = 0.0;
};
PsdVerdict herglotz_positivity(const MomentSequence& s);

// Largest t >= 0 with {mu_hat(n) - t} still PSD (bisection to 1e-10), i.e.
// the coefficient of dirac0 in mu = t*delta_0 + nu. remainder holds nu's moments.
struct Delta0Split {
    double delta0_mass = 0.0; // in mu_hat units: mass/(2*pi)
    MomentSequence remainder;
};
Delta0Split decompose_delta0(const MomentSequence& s);

} // namespace schwarz
