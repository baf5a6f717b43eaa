#pragma once

#include "schwarzkit/types.hpp"

namespace schwarz {

// Disc automorphism in canonical form: z -> e^{i*rotation} (z - center) / (1 - conj(center) z),
// the rotation applied after the Moebius factor. |center| < 1.
struct MoebiusTransform {
    double rotation = 0.0;
    Complex center = 0.0;

    MoebiusTransform() = default;
    MoebiusTransform(double rotation_, Complex center_);

    static MoebiusTransform identity() { return {}; }
    // phi_a: the automorphism sending a to 0
    static MoebiusTransform phi(Complex a) { return MoebiusTransform(0.0, a); }

    Complex operator()(Complex z) const;
    Complex derivative(Complex z) const; // e^{i theta} (1-|a|^2)/(1 - conj(a) z)^2
};

MoebiusTransform compose(const MoebiusTransform& s, const MoebiusTransform& t);
MoebiusTransform inverse(const MoebiusTransform& t);

// Equality is decided pointwise at the probes 0, 1/2, i/2; canonical
// parameters can differ by a 2*pi wrap after composition.
bool pointwise_equal(const MoebiusTransform& s, const MoebiusTransform& t, double tol = 1e-12);

// rho(a, b) = |(b - a) / (1 - conj(a) b)|, for interior a, b.
double pseudohyperbolic_distance(Complex a, Complex b);

} // namespace schwarz
