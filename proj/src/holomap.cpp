#include "schwarzkit/holomap.hpp"

#include <cmath>
#include <sstream>

#include "schwarzkit/errors.hpp"

namespace schwarz {

namespace {

Complex blaschke_factor(Complex z, Complex a) { return (z - a) / (1.0 - std::conj(a) * z); }

// d/dz of a single factor
Complex blaschke_factor_derivative(Complex z, Complex a) {
    Complex d = 1.0 - std::conj(a) * z;
    return (1.0 - std::norm(a)) / (d * d);
}

std::shared_ptr<const SelfMapCertificate> structural_certificate() {
    static const auto cert = std::make_shared<const SelfMapCertificate>(SelfMapCertificate{1.0, 0, 0.0});
    return cert;
}

} // namespace

FunctionSpec FunctionSpec::blaschke(double rotation, std::vector<Complex> zeros) {
    for (Complex a : zeros)
        if (std::abs(a) >= 1.0)
            throw Error(Error::Code::bad_input, "Blaschke zeros must lie in the open disc");
    FunctionSpec f;
    f.node_ = std::make_shared<const Node>(Blaschke{wrap_angle(rotation), std::move(zeros)});
    f.cert_ = structural_certificate();
    return f;
}

FunctionSpec FunctionSpec::herglotz_induced(HerglotzData data) {
    FunctionSpec f;
    f.node_ = std::make_shared<const Node>(HerglotzInduced{std::move(data)});
    return f;
}

FunctionSpec FunctionSpec::polynomial(std::vector<Complex> coefficients) {
    FunctionSpec f;
    f.node_ = std::make_shared<const Node>(Polynomial{std::move(coefficients)});
    return f;
}

FunctionSpec FunctionSpec::moebius(MoebiusTransform t) {
    FunctionSpec f;
    f.node_ = std::make_shared<const Node>(MoebiusMap{t});
    f.cert_ = structural_certificate();
    return f;
}

FunctionSpec FunctionSpec::compose(FunctionSpec outer, FunctionSpec inner) {
    if (!inner.certified())
        throw Error(Error::Code::certification_missing,
                    "composition requires a certified inner map");
    FunctionSpec f;
    f.node_ = std::make_shared<const Node>(
        Composition{std::make_shared<const FunctionSpec>(std::move(outer)),
                    std::make_shared<const FunctionSpec>(std::move(inner))});
    return f;
}

Complex FunctionSpec::operator()(Complex z) const {
    struct Eval {
        Complex z;
        Complex operator()(const Blaschke& b) const {
            Complex v = std::polar(1.0, b.rotation);
            for (Complex a : b.zeros) v *= blaschke_factor(z, a);
            return v;
        }
        Complex operator()(const HerglotzInduced& h) const {
            return cayley_halfplane_to_disc(herglotz_transform(h.data, z));
        }
        Complex operator()(const Polynomial& p) const {
            Complex v = 0.0;
            for (auto it = p.coefficients.rbegin(); it != p.coefficients.rend(); ++it)
                v = v * z + *it;
            return v;
        }
        Complex operator()(const MoebiusMap& m) const { return m.transform(z); }
        Complex operator()(const Composition& c) const { return (*c.outer)((*c.inner)(z)); }
    };
    return std::visit(Eval{z}, *node_);
}

Complex FunctionSpec::derivative(Complex z) const {
    struct Deriv {
        Complex z;
        Complex operator()(const Blaschke& b) const {
            // product rule over factors; robust at repeated zeros where the
            // logarithmic form is singular
            const std::size_t n = b.zeros.size();
            Complex sum = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                Complex term = blaschke_factor_derivative(z, b.zeros[k]);
                for (std::size_t j = 0; j < n; ++j)
                    if (j != k) term *= blaschke_factor(z, b.zeros[j]);
                sum += term;
            }
            return std::polar(1.0, b.rotation) * sum;
        }
        Complex operator()(const HerglotzInduced& h) const {
            // phi = (g-1)/(g+1)  =>  phi' = 2 g' / (g+1)^2
            Complex g = herglotz_transform(h.data, z);
            Complex gp = herglotz_transform_derivative(h.data, z);
            Complex d = g + 1.0;
            return 2.0 * gp / (d * d);
        }
        Complex operator()(const Polynomial& p) const {
            Complex v = 0.0;
            for (std::size_t k = p.coefficients.size(); k-- > 1;)
                v = v * z + static_cast<double>(k) * p.coefficients[k];
            return v;
        }
        Complex operator()(const MoebiusMap& m) const { return m.transform.derivative(z); }
        Complex operator()(const Composition& c) const {
            return c.outer->derivative((*c.inner)(z)) * c.inner->derivative(z);
        }
    };
    return std::visit(Deriv{z}, *node_);
}

std::string FunctionSpec::kind() const {
    struct Kind {
        std::string operator()(const Blaschke&) const { return "blaschke"; }
        std::string operator()(const HerglotzInduced&) const { return "herglotz"; }
        std::string operator()(const Polynomial&) const { return "polynomial"; }
        std::string operator()(const MoebiusMap&) const { return "moebius"; }
        std::string operator()(const Composition&) const { return "composition"; }
    };
    return std::visit(Kind{}, *node_);
}

ComplexFn FunctionSpec::evaluator() const {
    FunctionSpec copy = *this;
    return [copy](Complex z) { return copy(z); };
}

FunctionSpec certify_self_map(const FunctionSpec& f, int grid, Exec mode) {
    if (grid < 256) throw Error(Error::Code::bad_input, "certification grid must be >= 256");
    const double radius = 1.0 - 1e-6;
    CircleScan scan = max_modulus_on_circle([&](Complex z) { return f(z); }, radius,
                                            static_cast<std::size_t>(grid), mode);
    const bool structural =
        std::holds_alternative<FunctionSpec::Blaschke>(f.node()) ||
        std::holds_alternative<FunctionSpec::MoebiusMap>(f.node());
    if (!structural && scan.max_modulus > 1.0 + 1e-9) {
        std::ostringstream msg;
        msg << "not a self-map: |f| = " << scan.max_modulus << " at " << scan.argmax.real()
            << (scan.argmax.imag() < 0 ? "" : "+") << scan.argmax.imag() << "i";
        throw Error(Error::Code::certification_failed, msg.str());
    }
    FunctionSpec out = f;
    out.cert_ = std::make_shared<const SelfMapCertificate>(
        SelfMapCertificate{structural ? 1.0 : scan.max_modulus, grid, 1.0 - scan.max_modulus});
    return out;
}

TaylorResult taylor_coefficients(const ComplexFn& f, int n, double radius) {
    if (n <= 0 || radius <= 0.0 || radius > 0.9)
        throw Error(Error::Code::bad_input, "taylor_coefficients: need n > 0, 0 < radius <= 0.9");
    const int samples = std::max(8 * n, 32);
    std::vector<Complex> values(static_cast<std::size_t>(samples));
    double max_mod = 0.0;
    for (int m = 0; m < samples; ++m) {
        values[static_cast<std::size_t>(m)] = f(std::polar(radius, kTwoPi * m / samples));
        max_mod = std::max(max_mod, std::abs(values[static_cast<std::size_t>(m)]));
    }
    TaylorResult out;
    out.coefficients.resize(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        Complex sum = 0.0;
        for (int m = 0; m < samples; ++m)
            sum += values[static_cast<std::size_t>(m)] * std::polar(1.0, -kTwoPi * k * m / samples);
        out.coefficients[static_cast<std::size_t>(k)] =
            sum / (static_cast<double>(samples) * std::pow(radius, k));
    }
    out.error_bound = std::pow(radius, n) / (1.0 - radius) * max_mod;
    return out;
}

TaylorResult taylor_coefficients(const FunctionSpec& f, int n, double radius) {
    return taylor_coefficients([&](Complex z) { return f(z); }, n, radius);
}

} // namespace schwarz
