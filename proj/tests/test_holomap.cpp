#include <doctest.h>

#include "oracles.hpp"
#include "schwarzkit/errors.hpp"
#include "schwarzkit/holomap.hpp"
#include "schwarzkit/rng.hpp"
#include "schwarzkit/series.hpp"

using namespace schwarz;

namespace {

FunctionSpec extremal(double a) {
    // z (z + a)/(1 + a z)
    return FunctionSpec::blaschke(0.0, {Complex(0.0, 0.0), Complex(-a, 0.0)});
}

FunctionSpec random_spec(Rng& rng, int which) {
    switch (which % 3) {
        case 0: {
            std::vector<Complex> zeros;
            for (int i = 0, n = rng.uniform_int(1, 4); i < n; ++i) zeros.push_back(rng.in_disc(0.8));
            return FunctionSpec::blaschke(rng.uniform(0.0, kTwoPi), zeros);
        }
        case 1: {
            std::vector<BoundaryMeasure::Atom> atoms;
            for (int i = 0, n = rng.uniform_int(1, 4); i < n; ++i)
                atoms.push_back({rng.uniform(0.0, kTwoPi), rng.uniform(0.1, 1.5)});
            return FunctionSpec::herglotz_induced({BoundaryMeasure(std::move(atoms)), rng.uniform(-0.3, 0.3)});
        }
        default:
            return FunctionSpec::moebius(MoebiusTransform(rng.uniform(0.0, kTwoPi), rng.in_disc(0.8)));
    }
}

} // namespace

TEST_CASE("evaluate basic variants") {
    FunctionSpec id = FunctionSpec::identity();
    CHECK(std::abs(id(Complex(0.5, 0.0)) - Complex(0.5, 0.0)) < 1e-15);

    FunctionSpec square = FunctionSpec::blaschke(0.0, {Complex(0, 0), Complex(0, 0)});
    CHECK(std::abs(square(Complex(0.5, 0.0)) - Complex(0.25, 0.0)) < 1e-15);

    // z - (1/10)(z-1)^3 evaluates to 1 at z = 1
    FunctionSpec cubic = FunctionSpec::polynomial({0.1, 0.7, 0.3, -0.1});
    CHECK(std::abs(cubic(Complex(1.0, 0.0)) - 1.0) < 1e-15);
}

TEST_CASE("derivative examples") {
    CHECK(std::abs(FunctionSpec::identity().derivative(Complex(0.3, 0.2)) - 1.0) < 1e-15);

    FunctionSpec square = FunctionSpec::blaschke(0.0, {Complex(0, 0), Complex(0, 0)});
    Complex z(0.4, -0.1);
    CHECK(std::abs(square.derivative(z) - 2.0 * z) < 1e-14);

    // the extremal family has f'(0) = a
    CHECK(std::abs(extremal(0.5).derivative(Complex(0, 0)) - 0.5) < 1e-14);
}

TEST_CASE("derivative matches finite differences on every variant") {
    Rng rng(97);
    for (int i = 0; i < 60; ++i) {
        FunctionSpec f = random_spec(rng, i);
        Complex z = rng.in_disc(0.7);
        Complex exact = f.derivative(z);
        Complex approx = oracles::finite_difference([&](Complex w) { return f(w); }, z);
        CHECK(std::abs(exact - approx) <= 1e-6 * std::max(1.0, std::abs(exact)));
    }

    // composition chain rule
    FunctionSpec inner = FunctionSpec::blaschke(0.4, {Complex(0.2, 0.1)});
    FunctionSpec outer = FunctionSpec::blaschke(0.0, {Complex(0, 0), Complex(0, 0)});
    FunctionSpec comp = FunctionSpec::compose(outer, inner);
    Complex z(0.25, -0.3);
    CHECK(std::abs(comp.derivative(z) -
                   oracles::finite_difference([&](Complex w) { return comp(w); }, z)) < 1e-6);
}

TEST_CASE("blaschke derivative is robust at repeated zeros") {
    FunctionSpec cube = FunctionSpec::blaschke(0.0, {Complex(0, 0), Complex(0, 0), Complex(0, 0)});
    CHECK(std::abs(cube.derivative(Complex(0, 0))) < 1e-15); // 3 z^2 at 0
    Complex a(0.3, 0.3);
    FunctionSpec repeated = FunctionSpec::blaschke(0.0, {a, a});
    CHECK(std::abs(repeated.derivative(a)) < 1e-15); // double zero kills the derivative
}

TEST_CASE("certification") {
    // Blaschke products are inner: structural certificate
    FunctionSpec b = FunctionSpec::blaschke(0.2, {Complex(0.5, 0.1)});
    CHECK(b.certified());
    CHECK(b.certificate()->max_boundary_modulus == 1.0);

    // the cubic contact example is a certified self-map
    FunctionSpec cubic = certify_self_map(FunctionSpec::polynomial({0.1, 0.7, 0.3, -0.1}));
    CHECK(cubic.certified());
    CHECK(cubic.certificate()->max_boundary_modulus <= 1.0 + 1e-9);

    // 2z is not
    CHECK_THROWS_AS(certify_self_map(FunctionSpec::polynomial({Complex(0, 0), Complex(2, 0)})),
                    Error);
    // grid floor
    CHECK_THROWS_AS(certify_self_map(FunctionSpec::polynomial({Complex(0, 0)}), 100), Error);
}

TEST_CASE("composition requires a certified inner map") {
    FunctionSpec poly = FunctionSpec::polynomial({Complex(0, 0), Complex(0.5, 0)});
    CHECK_THROWS_AS(FunctionSpec::compose(FunctionSpec::identity(), poly), Error);
    FunctionSpec certified = certify_self_map(poly);
    CHECK_NOTHROW(FunctionSpec::compose(FunctionSpec::identity(), certified));
}

TEST_CASE("herglotz-induced maps reject the boundary") {
    FunctionSpec f = FunctionSpec::herglotz_induced({BoundaryMeasure::dirac0(), 0.0});
    CHECK_THROWS_AS(f(Complex(1.0, 0.0)), Error);
    CHECK_NOTHROW(f(Complex(0.999999, 0.0)));
}

TEST_CASE("taylor coefficients") {
    TaylorResult id = taylor_coefficients(FunctionSpec::identity(), 6);
    CHECK(std::abs(id.coefficients[0]) < 1e-12);
    CHECK(std::abs(id.coefficients[1] - 1.0) < 1e-12);
    for (int k = 2; k < 6; ++k) CHECK(std::abs(id.coefficients[static_cast<std::size_t>(k)]) < 1e-12);

    TaylorResult sq = taylor_coefficients(FunctionSpec::blaschke(0.0, {Complex(0, 0), Complex(0, 0)}), 6);
    CHECK(std::abs(sq.coefficients[2] - 1.0) < 1e-12);

    // z(z+a)/(1+az) = a z + (1-a^2) z^2 - ... : c1 = a, c2 = 1 - a^2
    const double a = 0.5;
    TaylorResult ext = taylor_coefficients(extremal(a), 6);
    CHECK(std::abs(ext.coefficients[1] - a) < 1e-11);
    CHECK(std::abs(ext.coefficients[2] - (1.0 - a * a)) < 1e-11);
    CHECK(ext.error_bound > 0.0);
}

TEST_CASE("taylor of a composition agrees with formal series composition") {
    // oracle: the one-variable truncated series engine
    FunctionSpec inner = certify_self_map(FunctionSpec::polynomial({0.0, Complex(0.45, 0.1), 0.2}));
    FunctionSpec outer = FunctionSpec::polynomial({Complex(0.1, 0.0), 0.3, Complex(0.0, 0.25), 0.1});
    FunctionSpec comp = FunctionSpec::compose(outer, inner);

    const int degree = 8;
    TaylorResult direct = taylor_coefficients(comp, degree + 1);

    PowerSeries f(1, 1, degree), g(1, 1, degree);
    TaylorResult outer_taylor = taylor_coefficients(outer, degree + 1);
    TaylorResult inner_taylor = taylor_coefficients(inner, degree + 1);
    for (int k = 0; k <= degree; ++k) {
        f.set_coeff(0, k, 0, outer_taylor.coefficients[static_cast<std::size_t>(k)]);
        g.set_coeff(0, k, 0, k == 0 ? Complex(0.0, 0.0)
                                    : inner_taylor.coefficients[static_cast<std::size_t>(k)]);
    }
    PowerSeries composed = series_compose(f, g);
    for (int k = 0; k <= degree; ++k)
        CHECK(std::abs(direct.coefficients[static_cast<std::size_t>(k)] - composed.coeff(0, k, 0)) <
              1e-9);
}

TEST_CASE("schwarz bound for certified origin-fixing maps") {
    Rng rng(131);
    for (int i = 0; i < 40; ++i) {
        std::vector<Complex> zeros = {Complex(0, 0)};
        for (int k = 0, n = rng.uniform_int(0, 3); k < n; ++k) zeros.push_back(rng.in_disc(0.8));
        FunctionSpec f = FunctionSpec::blaschke(rng.uniform(0.0, kTwoPi), zeros);
        CHECK(std::abs(f.derivative(Complex(0, 0))) <= 1.0 + 1e-10);
        const double d0 = std::abs(f.derivative(Complex(0, 0)));
        for (int j = 0; j < 25; ++j) {
            Complex z = rng.in_disc(0.95);
            const double r = std::abs(z);
            CHECK(std::abs(f(z)) <= r + 1e-10);
            // refined bound |f(z)| <= |z| (|z| + |f'(0)|) / (1 + |f'(0)||z|)
            CHECK(std::abs(f(z)) <= r * (r + d0) / (1.0 + d0 * r) + 1e-9);
        }
    }
}
