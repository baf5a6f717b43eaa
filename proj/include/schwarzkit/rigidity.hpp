#pragma once

#include <cstdint>
#include <span>

#include "schwarzkit/boundary.hpp"
#include "schwarzkit/herglotz.hpp"
#include "schwarzkit/holomap.hpp"
#include "schwarzkit/report.hpp"

namespace schwarz {

// Schwarz-Pick at the pair (a, b): the pseudohyperbolic contraction and the
// derivative bound. EqualityCase triggers the automorphism fit: a Moebius
// transform is fitted through the probes 0, 1/2, i/2 and checked at ten more
// points; the details record whether the fit reproduced f.
VerificationReport verify_schwarz_pick(const FunctionSpec& f, Complex a, Complex b,
                                       const ToleranceMap& tol = {});

// Boundary derivative bound |f'(b)| >= 2/(1 + |f'(0)|) for origin-fixing f
// with unimodular radial limit at b, plus the interior refinement
// |f(z)| <= |z| (|z| + |f'(0)|) / (1 + |f'(0)| |z|) at seeded random points.
VerificationReport verify_osserman(const FunctionSpec& f, Complex b, int interior_samples,
                                   std::uint64_t seed, const ToleranceMap& tol = {});

// Arc stretching: s <= sigma and sigma >= 2 s / (1 + |f'(0)|) for a Blaschke
// product with a zero at the origin. EqualityCase when sigma - s <= 1e-8
// (single-factor rotations).
VerificationReport verify_loewner_velling(const FunctionSpec& blaschke_product, double theta1,
                                          double theta2, const ToleranceMap& tol = {});

// Rigidity classification through the half-plane representation.
struct RigidityVerdict {
    enum class Class { identity, non_identity };

    Class classification = Class::non_identity;
    ContactFit contact;          // fitted order of phi against the identity at 1
    bool hypothesis_order4 = false; // contact order >= 3.9 (or the +inf sentinel)
    double delta0_mass = 0.0;    // recovered coefficient of delta_0 (mu_hat units)
    double remainder_mass = 0.0; // total mass of nu = mu - t*delta_0
    double constant_im = 0.0;    // recovered imaginary constant
    VerificationReport details;

    bool is_identity() const { return classification == Class::identity; }
};

// Pipeline: contact order at 1; Taylor coefficients of g = (1+phi)/(1-phi);
// moment recovery; Toeplitz positivity; delta_0 split. Identity verdict iff
// the recovered representation is exactly the one of the identity map
// (remainder mass < 1e-6, delta_0 coefficient 1, constant 0) and the contact
// hypothesis held. The caller certifies phi (evaluator overload trusts it).
RigidityVerdict burns_krantz_classify(const FunctionSpec& phi, int taylor_degree = 12,
                                      double taylor_radius = 0.5, const ToleranceMap& tol = {});
RigidityVerdict burns_krantz_classify_eval(const ComplexFn& phi, int taylor_degree = 12,
                                           double taylor_radius = 0.5, const ToleranceMap& tol = {});

// f(0) = 0 and f'(0) = 1 force the identity; when |f'(0) - 1| < 1e-10 the
// conclusion is asserted on a 100-point sample.
VerificationReport verify_schwarz_uniqueness_origin(const FunctionSpec& f,
                                                    const ToleranceMap& tol = {});

// h(z) = Re[(1+f)/(1-f)] - Re[(1+B)/(1-B)].
double chelst_h(const FunctionSpec& f, const FunctionSpec& blaschke_product, Complex z);

// Hypothesis/conclusion audit of the Blaschke comparison statement:
//  (i)  h >= 0 on an interior grid (outside exclusion zones),
//  (ii) contact order >= 3.9 at the designated point a = points_where_b_is_1[0],
//  (iii) contact order >= 1.9 at the remaining points,
//  (iv) conclusion: f == B on the grid.
// Verdict violated only when the hypotheses hold and the conclusion fails.
VerificationReport verify_chelst(const FunctionSpec& f, const FunctionSpec& blaschke_product,
                                 std::span<const Complex> points_where_b_is_1,
                                 const ToleranceMap& tol = {});

} // namespace schwarz
