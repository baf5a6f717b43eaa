#include <doctest.h>

#include "schwarzkit/disc.hpp"
#include "schwarzkit/errors.hpp"
#include "schwarzkit/holomap.hpp"
#include "schwarzkit/rng.hpp"

using namespace schwarz;

namespace {
MoebiusTransform random_transform(Rng& rng) {
    return MoebiusTransform(rng.uniform(0.0, kTwoPi), rng.in_disc(0.9));
}
} // namespace

TEST_CASE("moebius apply") {
    MoebiusTransform phi_half(0.0, Complex(0.5, 0.0));
    CHECK(std::abs(phi_half(Complex(0.5, 0.0))) < 1e-15);            // phi_a(a) = 0
    CHECK(std::abs(phi_half(Complex(0.0, 0.0)) - Complex(-0.5, 0.0)) < 1e-15);

    MoebiusTransform id;
    Complex z(0.3, 0.4);
    CHECK(std::abs(id(z) - z) < 1e-15);
}

TEST_CASE("moebius derivative") {
    MoebiusTransform id;
    CHECK(std::abs(id.derivative(Complex(0.2, 0.7)) - 1.0) < 1e-15);

    MoebiusTransform phi_half(0.0, Complex(0.5, 0.0));
    CHECK(std::abs(phi_half.derivative(Complex(0.0, 0.0)) - 0.75) < 1e-15);
    CHECK(std::abs(phi_half.derivative(Complex(0.5, 0.0)) - 4.0 / 3.0) < 1e-14);
}

TEST_CASE("moebius center outside the disc is rejected") {
    CHECK_THROWS_AS(MoebiusTransform(0.0, Complex(1.0, 0.2)), Error);
}

TEST_CASE("composition and inverse") {
    Complex a(0.4, -0.3);
    MoebiusTransform phi_a(0.0, a), phi_ma(0.0, -a);
    CHECK(pointwise_equal(compose(phi_ma, phi_a), MoebiusTransform::identity()));

    Rng rng(11);
    MoebiusTransform t = random_transform(rng);
    CHECK(pointwise_equal(compose(MoebiusTransform::identity(), t), t));
    CHECK(pointwise_equal(compose(MoebiusTransform(kPi, 0.0), MoebiusTransform(kPi, 0.0)),
                          MoebiusTransform::identity()));

    // invert(phi_a) acts as phi_{-a}
    CHECK(pointwise_equal(inverse(phi_a), phi_ma));
    CHECK(pointwise_equal(inverse(MoebiusTransform::identity()), MoebiusTransform::identity()));

    for (int i = 0; i < 50; ++i) {
        MoebiusTransform s = random_transform(rng);
        CHECK(pointwise_equal(inverse(inverse(s)), s));
        CHECK(pointwise_equal(compose(inverse(s), s), MoebiusTransform::identity()));
        CHECK(pointwise_equal(compose(s, inverse(s)), MoebiusTransform::identity()));
    }
}

TEST_CASE("composition acts pointwise and is associative") {
    Rng rng(23);
    for (int i = 0; i < 50; ++i) {
        MoebiusTransform s = random_transform(rng), t = random_transform(rng),
                         u = random_transform(rng);
        Complex z = rng.in_disc(0.98);
        CHECK(std::abs(compose(s, t)(z) - s(t(z))) < 1e-12);
        CHECK(pointwise_equal(compose(compose(s, t), u), compose(s, compose(t, u))));
    }
}

TEST_CASE("boundary preservation") {
    Rng rng(37);
    for (int i = 0; i < 200; ++i) {
        MoebiusTransform t = random_transform(rng);
        Complex b = rng.on_circle();
        CHECK(std::abs(std::abs(t(b)) - 1.0) < 1e-12);
    }
}

TEST_CASE("pseudohyperbolic distance") {
    Complex a(0.3, -0.2);
    CHECK(pseudohyperbolic_distance(a, a) == 0.0);

    Rng rng(5);
    for (int i = 0; i < 20; ++i) {
        Complex b = rng.in_disc(0.95);
        CHECK(pseudohyperbolic_distance(Complex(0.0, 0.0), b) == doctest::Approx(std::abs(b)).epsilon(1e-14));
    }

    // independent arithmetic: |(0.7-0.3)/(1-0.21)|
    const double expected = 0.4 / 0.79;
    CHECK(pseudohyperbolic_distance(Complex(0.3, 0.0), Complex(0.7, 0.0)) ==
          doctest::Approx(expected).epsilon(1e-14));

    // symmetry
    for (int i = 0; i < 20; ++i) {
        Complex x = rng.in_disc(0.9), y = rng.in_disc(0.9);
        CHECK(pseudohyperbolic_distance(x, y) ==
              doctest::Approx(pseudohyperbolic_distance(y, x)).epsilon(1e-14));
    }
}

TEST_CASE("metric is automorphism invariant") {
    Rng rng(101);
    for (int i = 0; i < 200; ++i) {
        MoebiusTransform m = random_transform(rng);
        Complex a = rng.in_disc(0.95), b = rng.in_disc(0.95);
        CHECK(std::abs(pseudohyperbolic_distance(m(a), m(b)) - pseudohyperbolic_distance(a, b)) <
              1e-12);
    }
}

TEST_CASE("certified self-maps contract the metric") {
    Rng rng(211);
    for (int i = 0; i < 100; ++i) {
        std::vector<Complex> zeros;
        int n = rng.uniform_int(1, 4);
        for (int k = 0; k < n; ++k) zeros.push_back(rng.in_disc(0.8));
        FunctionSpec f = FunctionSpec::blaschke(rng.uniform(0.0, kTwoPi), zeros);
        REQUIRE(f.certified());
        Complex a = rng.in_disc(0.9), b = rng.in_disc(0.9);
        CHECK(pseudohyperbolic_distance(f(a), f(b)) <=
              pseudohyperbolic_distance(a, b) + 1e-10);
    }
}
