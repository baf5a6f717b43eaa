#include <doctest.h>

#include "oracles.hpp"
#include "schwarzkit/errors.hpp"
#include "schwarzkit/herglotz.hpp"
#include "schwarzkit/holomap.hpp"
#include "schwarzkit/rng.hpp"

using namespace schwarz;

namespace {
BoundaryMeasure random_measure(Rng& rng, int max_atoms) {
    std::vector<BoundaryMeasure::Atom> atoms;
    for (int i = 0, n = rng.uniform_int(1, max_atoms); i < n; ++i)
        atoms.push_back({rng.uniform(0.0, kTwoPi), rng.uniform(0.05, 2.0)});
    return BoundaryMeasure(std::move(atoms));
}
} // namespace

TEST_CASE("measure construction merges and validates") {
    CHECK_THROWS_AS(BoundaryMeasure({{0.0, -1.0}}), Error);
    BoundaryMeasure merged({{1.0, 0.5}, {1.0 + 5e-13, 0.25}});
    CHECK(merged.atoms.size() == 1);
    CHECK(merged.total_mass() == doctest::Approx(0.75));
}

TEST_CASE("transform of dirac0 is the Cayley kernel") {
    HerglotzData h{BoundaryMeasure::dirac0(), 0.0};
    Rng rng(3);
    for (int i = 0; i < 50; ++i) {
        Complex z = rng.in_disc(0.95);
        CHECK(std::abs(herglotz_transform(h, z) - (1.0 + z) / (1.0 - z)) < 1e-12);
    }
}

TEST_CASE("transform basics") {
    // equal masses at 0 and pi, total 2*pi: kernel average is 1 at z = 0
    HerglotzData h{BoundaryMeasure({{0.0, kPi}, {kPi, kPi}}), 0.0};
    CHECK(std::abs(herglotz_transform(h, Complex(0, 0)) - 1.0) < 1e-15);

    HerglotzData empty{BoundaryMeasure(), 1.0};
    CHECK(std::abs(herglotz_transform(empty, Complex(0.3, 0.2)) - Complex(0, 1)) < 1e-15);

    // nonnegative real part on random samples
    Rng rng(17);
    for (int i = 0; i < 1000; ++i) {
        HerglotzData m{random_measure(rng, 8), rng.uniform(-1.0, 1.0)};
        CHECK(herglotz_transform(m, rng.in_disc(0.98)).real() > -1e-12);
    }
}

TEST_CASE("cayley transforms invert each other") {
    CHECK(std::abs(cayley_halfplane_to_disc(Complex(1, 0))) < 1e-15);
    CHECK(std::abs(cayley_halfplane_to_disc(Complex(0, 0)) - Complex(-1, 0)) < 1e-15);
    CHECK(std::abs(cayley_disc_to_halfplane(Complex(0, 0)) - 1.0) < 1e-15);
    CHECK(std::abs(cayley_disc_to_halfplane(Complex(-0.5, 0)) - 1.0 / 3.0) < 1e-15);

    Rng rng(29);
    for (int i = 0; i < 200; ++i) {
        Complex phi = rng.in_disc(0.999);
        CHECK(std::abs(cayley_halfplane_to_disc(cayley_disc_to_halfplane(phi)) - phi) < 1e-13);
        Complex z = rng.in_disc(0.95);
        CHECK(std::abs(cayley_halfplane_to_disc((1.0 + z) / (1.0 - z)) - z) < 1e-13);
    }
}

TEST_CASE("moments of measures") {
    MomentSequence dirac = moments_of_measure(BoundaryMeasure::dirac0(), 8);
    for (const Complex& v : dirac.values) CHECK(std::abs(v - 1.0) < 1e-15);

    MomentSequence pi_atom = moments_of_measure(BoundaryMeasure({{kPi, kTwoPi}}), 8);
    for (std::size_t n = 0; n < pi_atom.size(); ++n)
        CHECK(std::abs(pi_atom.values[n] - Complex(n % 2 ? -1.0 : 1.0, 0.0)) < 1e-14);

    // two atoms (0, pi) and (pi, pi): direct summation oracle
    BoundaryMeasure two({{0.0, kPi}, {kPi, kPi}});
    MomentSequence m = moments_of_measure(two, 4);
    std::vector<std::pair<double, double>> pairs = {{0.0, kPi}, {kPi, kPi}};
    for (int n = 0; n <= 4; ++n)
        CHECK(std::abs(m.values[static_cast<std::size_t>(n)] -
                       oracles::moment_by_summation(pairs, n)) < 1e-14);
    CHECK(std::abs(m.values[0] - 1.0) < 1e-14);
    CHECK(std::abs(m.values[1]) < 1e-14);
    CHECK(std::abs(m.values[2] - 1.0) < 1e-14);
}

TEST_CASE("moments from map coefficients") {
    // g = (1+z)/(1-z): c = [1, 2, 2, ...]
    std::vector<Complex> c = {1.0, 2.0, 2.0, 2.0, 2.0};
    RecoveredMoments rec = moments_from_map(c);
    CHECK(rec.constant_im == 0.0);
    for (const Complex& v : rec.moments.values) CHECK(std::abs(v - 1.0) < 1e-15);

    // g == 1: uniform measure
    RecoveredMoments uniform = moments_from_map(std::vector<Complex>{Complex(1.0, 0.0), 0.0, 0.0});
    CHECK(std::abs(uniform.moments.values[0] - 1.0) < 1e-15);
    CHECK(std::abs(uniform.moments.values[1]) < 1e-15);
}

TEST_CASE("toeplitz positivity verdicts") {
    CHECK(herglotz_positivity(moments_of_measure(BoundaryMeasure::dirac0(), 8)).psd);

    MomentSequence bad;
    bad.values = {Complex(1, 0), Complex(2, 0)};
    PsdVerdict v = herglotz_positivity(bad);
    CHECK(!v.psd);
    CHECK(v.min_eigenvalue < 0.0);

    Rng rng(41);
    for (int i = 0; i < 100; ++i) {
        MomentSequence m = moments_of_measure(random_measure(rng, 8), 10);
        PsdVerdict verdict = herglotz_positivity(m);
        CHECK(verdict.psd);
        CHECK(verdict.min_eigenvalue >= -1e-10 * m.mass0());
    }
}

TEST_CASE("delta0 decomposition") {
    // mu_hat == 1 -> full dirac0 mass, zero remainder
    Delta0Split all = decompose_delta0(moments_of_measure(BoundaryMeasure::dirac0(), 10));
    CHECK(all.delta0_mass == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(std::abs(all.remainder.mass0()) < 1e-8);

    // pure pi atom carries no dirac0 part
    Delta0Split none = decompose_delta0(moments_of_measure(BoundaryMeasure({{kPi, kTwoPi}}), 10));
    CHECK(none.delta0_mass <= 1e-9);

    // dirac0 + pi atom splits into its parts
    Delta0Split mixed =
        decompose_delta0(moments_of_measure(BoundaryMeasure({{0.0, kTwoPi}, {kPi, kTwoPi}}), 10));
    CHECK(mixed.delta0_mass == doctest::Approx(1.0).epsilon(1e-8));
    MomentSequence pi_only = moments_of_measure(BoundaryMeasure({{kPi, kTwoPi}}), 10);
    for (std::size_t n = 0; n < pi_only.size(); ++n)
        CHECK(std::abs(mixed.remainder.values[n] - pi_only.values[n]) < 1e-8);

    MomentSequence bad;
    bad.values = {Complex(1, 0), Complex(2, 0)};
    CHECK_THROWS_AS(decompose_delta0(bad), Error);
}

TEST_CASE("moment roundtrip through the full pipeline") {
    Rng rng(53);
    for (int i = 0; i < 40; ++i) {
        HerglotzData h{random_measure(rng, 8), rng.uniform(-0.5, 0.5)};
        const int highest = 12;
        MomentSequence direct = moments_of_measure(h.measure, highest);

        FunctionSpec phi = FunctionSpec::herglotz_induced(h);
        TaylorResult tay = taylor_coefficients(
            [&](Complex z) { return cayley_disc_to_halfplane(phi(z)); }, highest + 1, 0.5);
        RecoveredMoments rec = moments_from_map(tay.coefficients);

        CHECK(std::abs(rec.constant_im - h.constant_im) < 1e-8);
        for (std::size_t n = 0; n <= static_cast<std::size_t>(highest); ++n)
            CHECK(std::abs(rec.moments.values[n] - direct.values[n]) < 1e-8);
    }
}
