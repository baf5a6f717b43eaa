#include "schwarzkit/series.hpp"

#include <cmath>

#include "schwarzkit/errors.hpp"

namespace schwarz {

PowerSeries::PowerSeries(int vars, int components, int max_degree)
    : vars_(vars), components_(components), degree_(max_degree) {
    if (vars != 1 && vars != 2)
        throw Error(Error::Code::bad_input, "power series supports 1 or 2 variables");
    if (components < 1 || max_degree < 1)
        throw Error(Error::Code::bad_input, "need components >= 1 and max_degree >= 1");
    const std::size_t n = static_cast<std::size_t>(degree_ + 1) * static_cast<std::size_t>(degree_ + 1);
    c_.assign(static_cast<std::size_t>(components), std::vector<Complex>(n, Complex(0.0, 0.0)));
}

std::size_t PowerSeries::idx(int i, int j) const {
    return static_cast<std::size_t>(i) + static_cast<std::size_t>(j) * static_cast<std::size_t>(degree_ + 1);
}

Complex PowerSeries::coeff(int component, int i, int j) const {
    if (i < 0 || j < 0 || i + j > degree_) return 0.0;
    return c_[static_cast<std::size_t>(component)][idx(i, j)];
}

void PowerSeries::set_coeff(int component, int i, int j, Complex value) {
    if (vars_ == 1 && j != 0)
        throw Error(Error::Code::bad_input, "second exponent must be 0 for one variable");
    if (i < 0 || j < 0 || i + j > degree_)
        throw Error(Error::Code::bad_input, "exponent exceeds max_degree");
    c_[static_cast<std::size_t>(component)][idx(i, j)] = value;
}

void PowerSeries::add_coeff(int component, int i, int j, Complex value) {
    set_coeff(component, i, j, coeff(component, i, j) + value);
}

PowerSeries PowerSeries::identity_map(int vars, int max_degree) {
    PowerSeries s(vars, vars, max_degree);
    s.set_coeff(0, 1, 0, 1.0);
    if (vars == 2) s.set_coeff(1, 0, 1, 1.0);
    return s;
}

bool PowerSeries::has_zero_constant_term(double tol) const {
    for (int c = 0; c < components_; ++c)
        if (std::abs(coeff(c, 0, 0)) > tol) return false;
    return true;
}

bool PowerSeries::linear_part_is_identity(double tol) const {
    if (!has_zero_constant_term(tol) || components_ != vars_) return false;
    for (int c = 0; c < components_; ++c) {
        if (std::abs(coeff(c, 1, 0) - (c == 0 ? 1.0 : 0.0)) > tol) return false;
        if (vars_ == 2 && std::abs(coeff(c, 0, 1) - (c == 1 ? 1.0 : 0.0)) > tol) return false;
    }
    return true;
}

std::optional<int> PowerSeries::lowest_nonlinear_degree(double tol) const {
    for (int d = 2; d <= degree_; ++d)
        for (int i = 0; i <= d; ++i) {
            int j = d - i;
            if (vars_ == 1 && j != 0) continue;
            for (int c = 0; c < components_; ++c)
                if (std::abs(coeff(c, i, j)) > tol) return d;
        }
    return std::nullopt;
}

Complex PowerSeries::evaluate(int component, Complex z1, Complex z2) const {
    Complex sum = 0.0;
    for (int i = 0; i <= degree_; ++i)
        for (int j = 0; i + j <= degree_; ++j) {
            Complex v = coeff(component, i, j);
            if (v == Complex(0.0, 0.0)) continue;
            sum += v * std::pow(z1, i) * std::pow(z2, j);
        }
    return sum;
}

namespace {

// scalar truncated series on the shared exponent layout
struct Scalar {
    int degree;
    std::vector<Complex> c;

    explicit Scalar(int d)
        : degree(d),
          c(static_cast<std::size_t>(d + 1) * static_cast<std::size_t>(d + 1), Complex(0.0, 0.0)) {}

    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i) +
               static_cast<std::size_t>(j) * static_cast<std::size_t>(degree + 1);
    }
    Complex at(int i, int j) const { return c[idx(i, j)]; }

    static Scalar one(int d) {
        Scalar s(d);
        s.c[0] = 1.0;
        return s;
    }
};

Scalar multiply(const Scalar& a, const Scalar& b) {
    Scalar out(a.degree);
    for (int i1 = 0; i1 <= a.degree; ++i1)
        for (int j1 = 0; i1 + j1 <= a.degree; ++j1) {
            Complex va = a.at(i1, j1);
            if (va == Complex(0.0, 0.0)) continue;
            for (int i2 = 0; i1 + j1 + i2 <= a.degree; ++i2)
                for (int j2 = 0; i1 + j1 + i2 + j2 <= a.degree; ++j2) {
                    Complex vb = b.at(i2, j2);
                    if (vb == Complex(0.0, 0.0)) continue;
                    out.c[out.idx(i1 + i2, j1 + j2)] += va * vb;
                }
        }
    return out;
}

} // namespace

PowerSeries series_compose(const PowerSeries& f, const PowerSeries& g) {
    if (g.components() != f.vars())
        throw Error(Error::Code::bad_input, "composition needs g components == f vars");
    if (g.max_degree() != f.max_degree())
        throw Error(Error::Code::bad_input, "composition needs a common max_degree");
    if (!g.has_zero_constant_term(0.0))
        throw Error(Error::Code::nonzero_constant_term, "inner series must vanish at 0");
    const int d = f.max_degree();

    // powers of the inner components up to degree d
    auto component_powers = [&](int comp) {
        std::vector<Scalar> powers;
        powers.push_back(Scalar::one(d));
        Scalar base(d);
        for (int i = 0; i <= d; ++i)
            for (int j = 0; i + j <= d; ++j) base.c[base.idx(i, j)] = g.coeff(comp, i, j);
        for (int p = 1; p <= d; ++p) powers.push_back(multiply(powers.back(), base));
        return powers;
    };
    std::vector<std::vector<Scalar>> pow_of(static_cast<std::size_t>(f.vars()));
    for (int v = 0; v < f.vars(); ++v) pow_of[static_cast<std::size_t>(v)] = component_powers(v);

    PowerSeries out(g.vars(), f.components(), d);
    for (int comp = 0; comp < f.components(); ++comp) {
        Scalar acc(d);
        for (int i = 0; i <= d; ++i)
            for (int j = 0; i + j <= d; ++j) {
                if (f.vars() == 1 && j != 0) continue;
                Complex fc = f.coeff(comp, i, j);
                if (fc == Complex(0.0, 0.0)) continue;
                Scalar term = pow_of[0][static_cast<std::size_t>(i)];
                if (f.vars() == 2 && j > 0) term = multiply(term, pow_of[1][static_cast<std::size_t>(j)]);
                for (std::size_t k = 0; k < acc.c.size(); ++k) acc.c[k] += fc * term.c[k];
            }
        for (int i = 0; i <= d; ++i)
            for (int j = 0; i + j <= d; ++j) {
                if (out.vars() == 1 && j != 0) continue;
                out.set_coeff(comp, i, j, acc.at(i, j));
            }
    }
    return out;
}

PowerSeries cartan_iterate(const PowerSeries& phi, int iterations) {
    if (!phi.linear_part_is_identity(0.0))
        throw Error(Error::Code::linear_part_not_identity,
                    "Cartan iteration needs linear part == identity");
    if (iterations < 1) throw Error(Error::Code::bad_input, "need at least one iteration");
    PowerSeries result = phi;
    for (int i = 1; i < iterations; ++i) result = series_compose(phi, result);
    return result;
}

CauchyEstimateReport cauchy_estimate_check(const PowerSeries& phi, double a, double b, int j_max) {
    if (!(0.0 < a && a < b))
        throw Error(Error::Code::bad_input, "need 0 < a < b");
    if (!phi.linear_part_is_identity(0.0))
        throw Error(Error::Code::linear_part_not_identity,
                    "Cauchy estimate check needs linear part == identity");
    CauchyEstimateReport report;
    auto k = phi.lowest_nonlinear_degree();
    if (!k) return report; // identity-like: every coefficient obeys every bound
    report.lowest_degree = *k;
    const double n = static_cast<double>(phi.vars());

    auto factorial = [](int m) {
        double f = 1.0;
        for (int i = 2; i <= m; ++i) f *= i;
        return f;
    };

    // scan the multi-indices of total degree k; the binding one violates first
    for (int i = 0; i <= *k; ++i) {
        int j = *k - i;
        if (phi.vars() == 1 && j != 0) continue;
        double alpha_factorial = factorial(i) * factorial(j);
        for (int comp = 0; comp < phi.components(); ++comp) {
            double mag = std::abs(phi.coeff(comp, i, j)) * alpha_factorial; // |D^alpha phi(0)|
            if (mag == 0.0) continue;
            double bound = n * b * alpha_factorial / std::pow(a, *k);
            for (int it = 1; it <= j_max; ++it) {
                if (static_cast<double>(it) * mag > bound) {
                    if (!report.first_violation_j || it < *report.first_violation_j) {
                        report.first_violation_j = it;
                        report.derivative_bound = bound;
                        report.base_derivative_magnitude = mag;
                    }
                    break;
                }
            }
        }
    }
    return report;
}

} // namespace schwarz
