#include "schwarzkit/json_io.hpp"

#include <iomanip>
#include <sstream>

#include "schwarzkit/errors.hpp"
#include "schwarzkit/report.hpp"

namespace schwarz {

namespace {

const nlohmann::json& field(const nlohmann::json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end())
        throw Error(Error::Code::bad_input, std::string("missing field \"") + name + '"');
    return *it;
}

std::vector<Complex> complex_list_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw Error(Error::Code::bad_input, "expected an array of [re, im]");
    std::vector<Complex> out;
    for (const auto& item : j) out.push_back(complex_from_json(item));
    return out;
}

nlohmann::json complex_list_to_json(std::span<const Complex> xs) {
    nlohmann::json out = nlohmann::json::array();
    for (Complex x : xs) out.push_back(complex_to_json(x));
    return out;
}

} // namespace

nlohmann::json measure_to_json(const HerglotzData& h) {
    nlohmann::json atoms = nlohmann::json::array();
    for (const auto& a : h.measure.atoms) atoms.push_back({a.angle, a.mass});
    return {{"atoms", atoms}, {"constant_im", h.constant_im}};
}

HerglotzData measure_from_json(const nlohmann::json& j) {
    std::vector<BoundaryMeasure::Atom> atoms;
    for (const auto& item : field(j, "atoms")) {
        if (!item.is_array() || item.size() != 2)
            throw Error(Error::Code::bad_input, "measure atoms are [theta, mass] pairs");
        atoms.push_back({item[0].get<double>(), item[1].get<double>()});
    }
    HerglotzData h;
    h.measure = BoundaryMeasure(std::move(atoms));
    h.constant_im = j.value("constant_im", 0.0);
    return h;
}

nlohmann::json function_spec_to_json(const FunctionSpec& f) {
    struct Encode {
        nlohmann::json operator()(const FunctionSpec::Blaschke& b) const {
            return {{"kind", "blaschke"},
                    {"rotation", b.rotation},
                    {"zeros", complex_list_to_json(b.zeros)}};
        }
        nlohmann::json operator()(const FunctionSpec::HerglotzInduced& h) const {
            return {{"kind", "herglotz"}, {"measure", measure_to_json(h.data)}};
        }
        nlohmann::json operator()(const FunctionSpec::Polynomial& p) const {
            return {{"kind", "polynomial"}, {"coefficients", complex_list_to_json(p.coefficients)}};
        }
        nlohmann::json operator()(const FunctionSpec::MoebiusMap& m) const {
            return {{"kind", "moebius"},
                    {"rotation", m.transform.rotation},
                    {"center", complex_to_json(m.transform.center)}};
        }
        nlohmann::json operator()(const FunctionSpec::Composition& c) const {
            return {{"kind", "composition"},
                    {"outer", function_spec_to_json(*c.outer)},
                    {"inner", function_spec_to_json(*c.inner)}};
        }
    };
    return std::visit(Encode{}, f.node());
}

FunctionSpec function_spec_from_json(const nlohmann::json& j) {
    const std::string kind = field(j, "kind").get<std::string>();
    if (kind == "blaschke")
        return FunctionSpec::blaschke(j.value("rotation", 0.0),
                                      complex_list_from_json(field(j, "zeros")));
    if (kind == "herglotz")
        return FunctionSpec::herglotz_induced(measure_from_json(field(j, "measure")));
    if (kind == "polynomial")
        return FunctionSpec::polynomial(complex_list_from_json(field(j, "coefficients")));
    if (kind == "moebius")
        return FunctionSpec::moebius(MoebiusTransform(j.value("rotation", 0.0),
                                                      complex_from_json(field(j, "center"))));
    if (kind == "composition") {
        FunctionSpec inner = function_spec_from_json(field(j, "inner"));
        if (!inner.certified()) inner = certify_self_map(inner);
        return FunctionSpec::compose(function_spec_from_json(field(j, "outer")), std::move(inner));
    }
    throw Error(Error::Code::bad_input, "unknown function kind \"" + kind + '"');
}

nlohmann::json series_to_json(const PowerSeries& s) {
    nlohmann::json terms = nlohmann::json::array();
    for (int i = 0; i <= s.max_degree(); ++i)
        for (int j = 0; i + j <= s.max_degree(); ++j) {
            if (s.vars() == 1 && j != 0) continue;
            std::vector<Complex> coeff;
            bool nonzero = false;
            for (int c = 0; c < s.components(); ++c) {
                coeff.push_back(s.coeff(c, i, j));
                nonzero = nonzero || coeff.back() != Complex(0.0, 0.0);
            }
            if (nonzero)
                terms.push_back({{"exponents", s.vars() == 1 ? nlohmann::json::array({i})
                                                             : nlohmann::json::array({i, j})},
                                 {"coeff", complex_list_to_json(coeff)}});
        }
    return {{"vars", s.vars()}, {"max_degree", s.max_degree()}, {"terms", terms}};
}

PowerSeries series_from_json(const nlohmann::json& j) {
    const int vars = field(j, "vars").get<int>();
    const int degree = field(j, "max_degree").get<int>();
    PowerSeries s(vars, vars, degree);
    for (const auto& term : field(j, "terms")) {
        const auto& e = field(term, "exponents");
        const int i = e.at(0).get<int>();
        const int jj = vars == 2 ? e.at(1).get<int>() : 0;
        std::vector<Complex> coeff = complex_list_from_json(field(term, "coeff"));
        if (static_cast<int>(coeff.size()) != vars)
            throw Error(Error::Code::bad_input, "series term needs one coefficient per component");
        for (int c = 0; c < vars; ++c) s.set_coeff(c, i, jj, coeff[static_cast<std::size_t>(c)]);
    }
    return s;
}

BallMap ball_map_from_json(const nlohmann::json& j) {
    const std::string kind = field(j, "kind").get<std::string>();
    if (kind == "identity") return BallMap::identity();
    if (kind == "line_automorphism") {
        const auto& a = field(j, "a");
        return BallMap::from_automorphism(automorphism_to_line(
            BallPoint{complex_from_json(a.at(0)), complex_from_json(a.at(1))}));
    }
    if (kind == "unitary") {
        std::vector<Complex> m = complex_list_from_json(field(j, "matrix"));
        if (m.size() != 4) throw Error(Error::Code::bad_input, "unitary matrix needs 4 entries");
        Eigen::Matrix2cd u;
        u << m[0], m[1], m[2], m[3];
        return BallMap::from_automorphism(BallAutomorphism::unitary(u));
    }
    if (kind == "product") {
        FunctionSpec f = function_spec_from_json(field(j, "z1_map"));
        return BallMap::product(std::move(f), field(j, "z2_scale").get<double>());
    }
    if (kind == "composition")
        return BallMap::composition(ball_map_from_json(field(j, "outer")),
                                    ball_map_from_json(field(j, "inner")));
    throw Error(Error::Code::bad_input, "unknown ball map kind \"" + kind + '"');
}

std::string describe_document(const nlohmann::json& j) {
    std::ostringstream out;
    out << std::setprecision(12);
    if (j.contains("atoms")) {
        HerglotzData h = measure_from_json(j);
        out << "boundary measure: " << h.measure.atoms.size() << " atoms, total mass "
            << h.measure.total_mass() << ", constant_im " << h.constant_im << '\n';
        for (const auto& a : h.measure.atoms)
            out << "  atom theta=" << a.angle << " mass=" << a.mass << '\n';
        return out.str();
    }
    FunctionSpec f = function_spec_from_json(j);
    out << "kind: " << f.kind() << '\n';
    bool certified = f.certified();
    if (!certified) {
        try {
            f = certify_self_map(f);
            certified = true;
        } catch (const Error&) {
            certified = false;
        }
    }
    out << "certified self-map: " << (certified ? "yes" : "no") << '\n';
    const Complex f0 = f(Complex(0.0, 0.0));
    const Complex d0 = f.derivative(Complex(0.0, 0.0));
    out << "f(0)  = " << f0.real() << (f0.imag() < 0 ? "" : "+") << f0.imag() << "i\n";
    out << "f'(0) = " << d0.real() << (d0.imag() < 0 ? "" : "+") << d0.imag() << "i\n";
    for (Complex b : {Complex(1, 0), Complex(0, 1), Complex(-1, 0), Complex(0, -1)}) {
        out << "radial limit at " << b.real() << (b.imag() < 0 ? "" : "+") << b.imag() << "i: ";
        try {
            Extrapolated lim = radial_limit(f, b);
            out << lim.value.real() << (lim.value.imag() < 0 ? "" : "+") << lim.value.imag()
                << "i (err~" << lim.error_estimate << ")\n";
        } catch (const Error& e) {
            out << e.what() << '\n';
        }
    }
    return out.str();
}

} // namespace schwarz
