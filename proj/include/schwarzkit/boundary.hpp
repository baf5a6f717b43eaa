#pragma once

#include <vector>

#include "schwarzkit/holomap.hpp"
#include "schwarzkit/types.hpp"

namespace schwarz {

// Radii marching to the boundary, t_j = 1 - 2^{-j}. The halving step makes
// Richardson extrapolation on the probe values stable.
std::vector<double> radial_schedule(int j_first, int j_last);

// Richardson-extrapolated limit of values sampled at steps h_j = 2^{-j}
// (h halving between consecutive entries). Returns the deepest table entry
// and the difference of the last two extrapolants as error estimate.
struct Extrapolated {
    Complex value;
    double error_estimate = 0.0;
};
Extrapolated richardson_limit(std::span<const Complex> values, int depth = 6);

// Radial limit of f at the boundary point b (|b| = 1), j = 4..20.
// Throws NonConvergent when the extrapolants differ by more than 1e-4.
Extrapolated radial_limit(const ComplexFn& f, Complex b);
Extrapolated radial_limit(const FunctionSpec& f, Complex b);

// |f'(b)| from the difference quotients (f(t_j b) - c)/(t_j b - b) with
// c the radial limit; agrees with the exact derivative whenever f extends
// analytically past b. Throws NotUnimodularLimit when ||c| - 1| > 1e-6.
double angular_derivative(const ComplexFn& f, Complex b);
double angular_derivative(const FunctionSpec& f, Complex b);

// Fitted contact exponent of f against reference at the boundary point b:
// least-squares slope of log|f - reference| vs log|z - b| along the radius,
// j = 6..16. Differences below 1e-13 are beneath double resolution; when
// all probes sit there the fit reports the +infinity sentinel.
struct ContactFit {
    double order = 0.0; // +inf sentinel for indistinguishable functions
    double coefficient_modulus = 0.0;
    double residual = 0.0; // RMS in log-log space

    bool at_least(double threshold) const;
};
ContactFit contact_order(const ComplexFn& f, const ComplexFn& reference, Complex b);
ContactFit contact_order(const FunctionSpec& f, const FunctionSpec& reference, Complex b);

// Arc length of the image of {e^{i t} : theta1 <= t <= theta2} under a
// finite Blaschke product, counted with multiplicity:
// sigma = Int |B'(e^{i t})| dt, adaptive Simpson to 1e-9 absolute.
double arc_image_length(const FunctionSpec& blaschke_product, double theta1, double theta2);

// Hopf lemma check for u = Re(analytic) vanishing at the boundary point P,
// nonnegative on the internally tangent ball of radius R. The Harnack floor
// c' = (min of u on the half-radius circle)/R; the verdict certifies strict
// negativity when the extrapolated inward derivative clears -c'/2.
struct HopfReport {
    double normal_derivative = 0.0;
    double harnack_constant = 0.0; // c'
    bool strictly_negative = false;
};
HopfReport hopf_check(const ComplexFn& analytic, Complex p, double tangent_radius);
HopfReport hopf_check(const FunctionSpec& analytic, Complex p, double tangent_radius);

// Maximum-principle consequence of collar nonnegativity: checks u >= 0 on
// the annulus {collar_inner_radius <= |z| < 1} (throws
// CollarHypothesisViolated otherwise), then reports the minimum of u over a
// uniform grid of the whole disc.
struct CollarReport {
    double min_value = 0.0;
    Complex argmin;
    bool nonnegative = false;
};
CollarReport collar_positivity(const ComplexFn& analytic, double collar_inner_radius,
                               std::size_t samples);

} // namespace schwarz
