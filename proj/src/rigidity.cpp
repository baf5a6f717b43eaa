#include "schwarzkit/rigidity.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

#include "schwarzkit/disc.hpp"
#include "schwarzkit/errors.hpp"
#include "schwarzkit/kernels.hpp"
#include "schwarzkit/rng.hpp"

namespace schwarz {

namespace {

void require_certificate(const FunctionSpec& f) {
    if (!f.certified())
        throw Error(Error::Code::certification_missing, "verifier needs a certified self-map");
}

std::string describe_inputs(const std::string& head, std::initializer_list<Complex> points) {
    std::ostringstream out;
    out << std::setprecision(17) << head;
    for (Complex p : points) out << ' ' << p.real() << ',' << p.imag();
    return digest(out.str());
}

// Moebius transform through the probe images f(0), f(1/2), f(i/2) by the
// cross-ratio construction; returns nothing when the probes are degenerate
// or the resulting map is not a disc automorphism.
std::optional<MoebiusTransform> fit_automorphism(const FunctionSpec& f) {
    const Complex z1(0.0, 0.0), z2(0.5, 0.0), z3(0.0, 0.5);
    const Complex w1 = f(z1), w2 = f(z2), w3 = f(z3);

    // matrix of the map sending (p1,p2,p3) to (0,1,inf)
    auto ratio_matrix = [](Complex p1, Complex p2, Complex p3) {
        return std::array<Complex, 4>{p2 - p3, -p1 * (p2 - p3), p2 - p1, -p3 * (p2 - p1)};
    };
    auto a = ratio_matrix(z1, z2, z3);
    auto b = ratio_matrix(w1, w2, w3);
    // M = adj(b) * a
    std::array<Complex, 4> m{b[3] * a[0] - b[1] * a[2], b[3] * a[1] - b[1] * a[3],
                             -b[2] * a[0] + b[0] * a[2], -b[2] * a[1] + b[0] * a[3]};
    if (std::abs(m[0]) < 1e-14) return std::nullopt;
    Complex center = -m[1] / m[0];
    if (std::abs(center) >= 1.0) return std::nullopt;
    // rotation from a probe away from the center
    Complex q = std::abs(center) < 0.25 ? Complex(0.5, 0.0) : Complex(0.0, 0.0);
    Complex denom_q = m[2] * q + m[3];
    if (std::abs(denom_q) < 1e-14) return std::nullopt;
    Complex mq = (m[0] * q + m[1]) / denom_q;
    Complex lambda = mq * (1.0 - std::conj(center) * q) / (q - center);
    if (std::abs(std::abs(lambda) - 1.0) > 1e-8) return std::nullopt;
    return MoebiusTransform(std::arg(lambda), center);
}

bool fit_matches(const FunctionSpec& f, const MoebiusTransform& t, double tol) {
    // ten fixed interior checkpoints
    for (int k = 0; k < 10; ++k) {
        Complex z = std::polar(0.15 + 0.08 * k, 0.7 * k);
        if (std::abs(f(z) - t(z)) > tol) return false;
    }
    return true;
}

} // namespace

VerificationReport verify_schwarz_pick(const FunctionSpec& f, Complex a, Complex b,
                                       const ToleranceMap& tol) {
    require_certificate(f);
    if (std::abs(a - b) == 0.0)
        throw Error(Error::Code::bad_input, "verify_schwarz_pick needs a != b");

    VerificationReport report;
    report.verifier = "schwarz-pick";
    report.inputs_digest = describe_inputs("schwarz-pick " + f.kind(), {a, b});

    double slack_floor, equality_slack, fit_tol;
    report.use_tolerance(tol, "slack_floor", -1e-10, &slack_floor);
    report.use_tolerance(tol, "equality_slack", 1e-9, &equality_slack);
    report.use_tolerance(tol, "fit_tol", 1e-8, &fit_tol);

    const Complex fa = f(a), fb = f(b);
    const double rho_ab = pseudohyperbolic_distance(a, b);
    const double rho_fab = pseudohyperbolic_distance(fa, fb);
    const double metric_slack = rho_ab - rho_fab;
    report.record_slack(a, metric_slack);

    const double derivative_bound = (1.0 - std::norm(fa)) / (1.0 - std::norm(a));
    const double derivative_slack = derivative_bound - std::abs(f.derivative(a));
    report.record_slack(a, derivative_slack);

    report.details["rho_ab"] = rho_ab;
    report.details["rho_fab"] = rho_fab;
    report.details["derivative_bound"] = derivative_bound;

    if (report.min_slack < slack_floor) {
        report.verdict = Verdict::violated;
        report.witness = a;
        return report;
    }

    // equality in either clause pins f to an automorphism; metric slack is
    // compared relatively since rho(a, b) itself can be small
    const bool equality = derivative_slack <= equality_slack ||
                          metric_slack <= equality_slack * std::max(rho_ab, 1e-12);
    if (equality) {
        report.verdict = Verdict::equality;
        auto fitted = fit_automorphism(f);
        bool ok = fitted && fit_matches(f, *fitted, fit_tol);
        report.details["automorphism_fit"] = ok;
        if (ok) {
            report.details["fit_rotation"] = fitted->rotation;
            report.details["fit_center"] = complex_to_json(fitted->center);
        }
    }
    return report;
}

VerificationReport verify_osserman(const FunctionSpec& f, Complex b, int interior_samples,
                                   std::uint64_t seed, const ToleranceMap& tol) {
    require_certificate(f);
    if (std::abs(f(Complex(0.0, 0.0))) > 1e-12)
        throw Error(Error::Code::not_origin_fixing, "verify_osserman needs f(0) = 0");

    VerificationReport report;
    report.verifier = "osserman";
    report.inputs_digest = describe_inputs("osserman " + f.kind(), {b});

    double boundary_slack_tol, interior_slack_tol;
    report.use_tolerance(tol, "boundary_slack", 1e-6, &boundary_slack_tol);
    report.use_tolerance(tol, "interior_slack", 1e-9, &interior_slack_tol);

    const double d0 = std::abs(f.derivative(Complex(0.0, 0.0)));
    const double boundary_bound = 2.0 / (1.0 + d0);
    const double fb = angular_derivative(f, b);
    const double boundary_slack = fb - boundary_bound;
    report.record_slack(normalize_boundary(b), boundary_slack);

    report.details["f_prime_0"] = d0;
    report.details["angular_derivative"] = fb;
    report.details["boundary_bound"] = boundary_bound;

    bool violated = boundary_slack < -boundary_slack_tol;

    // interior refinement at seeded random points
    Rng rng(seed);
    std::vector<Complex> pts(static_cast<std::size_t>(interior_samples));
    for (auto& z : pts) z = rng.in_disc(0.97);
    std::vector<double> slacks = map_indexed<double>(pts.size(), [&](std::size_t i) {
        Complex z = pts[i];
        double r = std::abs(z);
        double bound = r * (r + d0) / (1.0 + d0 * r);
        return bound - std::abs(f(z));
    });
    if (!slacks.empty()) {
        Extreme worst = min_of(slacks);
        report.record_slack(pts[worst.index], worst.value);
        report.details["interior_min_slack"] = worst.value;
        violated = violated || worst.value < -interior_slack_tol;
    }

    if (violated) {
        report.verdict = Verdict::violated;
        report.witness = normalize_boundary(b);
    } else if (std::abs(boundary_slack) <= boundary_slack_tol) {
        report.verdict = Verdict::equality;
    }
    return report;
}

VerificationReport verify_loewner_velling(const FunctionSpec& blaschke_product, double theta1,
                                          double theta2, const ToleranceMap& tol) {
    const auto* node = std::get_if<FunctionSpec::Blaschke>(&blaschke_product.node());
    if (!node)
        throw Error(Error::Code::bad_input, "verify_loewner_velling needs a Blaschke product");
    bool origin_zero = false;
    for (Complex z : node->zeros) origin_zero = origin_zero || std::abs(z) <= 1e-12;
    if (!origin_zero)
        throw Error(Error::Code::not_origin_fixing, "needs a zero at the origin");

    VerificationReport report;
    report.verifier = "loewner-velling";
    report.inputs_digest =
        describe_inputs("loewner", {Complex(theta1, theta2), Complex(static_cast<double>(node->zeros.size()), 0.0)});

    double arc_slack_tol, equality_arc;
    report.use_tolerance(tol, "arc_slack", 1e-8, &arc_slack_tol);
    report.use_tolerance(tol, "equality_arc", 1e-8, &equality_arc);

    const double s = theta2 - theta1;
    const double sigma = arc_image_length(blaschke_product, theta1, theta2);
    const double d0 = std::abs(blaschke_product.derivative(Complex(0.0, 0.0)));

    const double loewner_slack = sigma - s;
    const double velling_slack = sigma - 2.0 * s / (1.0 + d0);
    report.record_slack(unit_circle(theta1), loewner_slack);
    report.record_slack(unit_circle(theta2), velling_slack);

    report.details["arc_length"] = s;
    report.details["image_length"] = sigma;
    report.details["f_prime_0"] = d0;

    if (report.min_slack < -arc_slack_tol) {
        report.verdict = Verdict::violated;
        report.witness = unit_circle(theta1);
    } else if (loewner_slack <= equality_arc) {
        report.verdict = Verdict::equality;
    }
    return report;
}

RigidityVerdict burns_krantz_classify_eval(const ComplexFn& phi, int taylor_degree,
                                           double taylor_radius, const ToleranceMap& tol) {
    RigidityVerdict verdict;
    VerificationReport& report = verdict.details;
    report.verifier = "burns-krantz";

    double mass_tol, delta0_tol, constant_tol, order_gate;
    report.use_tolerance(tol, "identity_mass", 1e-6, &mass_tol);
    report.use_tolerance(tol, "identity_delta0", 1e-6, &delta0_tol);
    report.use_tolerance(tol, "identity_constant", 1e-6, &constant_tol);
    report.use_tolerance(tol, "order_gate", 3.9, &order_gate);

    verdict.contact = contact_order(phi, [](Complex z) { return z; }, Complex(1.0, 0.0));
    verdict.hypothesis_order4 = verdict.contact.at_least(order_gate);

    auto g = [&](Complex z) { return cayley_disc_to_halfplane(phi(z)); };
    TaylorResult tay = taylor_coefficients(g, taylor_degree + 1, taylor_radius);
    RecoveredMoments rec = moments_from_map(tay.coefficients);
    verdict.constant_im = rec.constant_im;

    PsdVerdict psd = herglotz_positivity(rec.moments);
    report.details["moments_min_eigenvalue"] = psd.min_eigenvalue;
    if (!psd.psd) {
        // not the transform of a positive measure: nothing like the identity
        verdict.classification = RigidityVerdict::Class::non_identity;
        report.details["moments_psd"] = false;
    } else {
        Delta0Split split = decompose_delta0(rec.moments);
        verdict.delta0_mass = split.delta0_mass;
        verdict.remainder_mass = kTwoPi * split.remainder.mass0();
        report.details["moments_psd"] = true;
        const bool identity_measure = verdict.remainder_mass < mass_tol &&
                                      std::abs(verdict.delta0_mass - 1.0) <= delta0_tol &&
                                      std::abs(verdict.constant_im) <= constant_tol;
        verdict.classification = identity_measure && verdict.hypothesis_order4
                                     ? RigidityVerdict::Class::identity
                                     : RigidityVerdict::Class::non_identity;
    }

    report.details["classification"] =
        verdict.is_identity() ? "identity" : "non-identity";
    report.details["contact_order"] =
        std::isinf(verdict.contact.order) ? nlohmann::json() : nlohmann::json(verdict.contact.order);
    report.details["hypothesis_order4"] = verdict.hypothesis_order4;
    report.details["delta0_mass"] = verdict.delta0_mass;
    report.details["remainder_mass"] = verdict.remainder_mass;
    report.details["constant_im"] = verdict.constant_im;
    report.details["taylor_degree"] = taylor_degree;
    report.details["taylor_radius"] = taylor_radius;
    report.record_slack(Complex(1.0, 0.0), mass_tol - verdict.remainder_mass);
    return verdict;
}

RigidityVerdict burns_krantz_classify(const FunctionSpec& phi, int taylor_degree,
                                      double taylor_radius, const ToleranceMap& tol) {
    require_certificate(phi);
    RigidityVerdict v = burns_krantz_classify_eval([&](Complex z) { return phi(z); }, taylor_degree,
                                                   taylor_radius, tol);
    v.details.inputs_digest = describe_inputs("burns-krantz " + phi.kind(), {});
    return v;
}

VerificationReport verify_schwarz_uniqueness_origin(const FunctionSpec& f,
                                                    const ToleranceMap& tol) {
    require_certificate(f);
    if (std::abs(f(Complex(0.0, 0.0))) > 1e-12)
        throw Error(Error::Code::not_origin_fixing, "needs f(0) = 0");

    VerificationReport report;
    report.verifier = "schwarz-uniqueness-origin";
    report.inputs_digest = describe_inputs("uniqueness " + f.kind(), {});

    double derivative_tol, identity_tol;
    report.use_tolerance(tol, "derivative_one", 1e-10, &derivative_tol);
    report.use_tolerance(tol, "identity_sup", 1e-8, &identity_tol);

    const Complex d0 = f.derivative(Complex(0.0, 0.0));
    report.details["f_prime_0"] = complex_to_json(d0);

    if (std::abs(d0 - 1.0) >= derivative_tol) {
        report.details["hypothesis_triggered"] = false;
        report.record_slack(Complex(0.0, 0.0), std::abs(d0 - 1.0));
        return report;
    }
    report.details["hypothesis_triggered"] = true;
    std::vector<Complex> grid = disc_grid(10, 10, 0.95);
    std::vector<double> slack = map_indexed<double>(grid.size(), [&](std::size_t i) {
        return identity_tol - std::abs(f(grid[i]) - grid[i]);
    });
    Extreme worst = min_of(slack);
    report.record_slack(grid[worst.index], worst.value);
    if (worst.value < 0.0) {
        report.verdict = Verdict::violated;
        report.witness = grid[worst.index];
    } else {
        report.verdict = Verdict::equality; // f is the identity at sampling resolution
        report.details["identity_confirmed"] = true;
    }
    return report;
}

double chelst_h(const FunctionSpec& f, const FunctionSpec& blaschke_product, Complex z) {
    if (std::abs(z) >= 1.0) throw Error(Error::Code::domain, "chelst_h needs |z| < 1");
    const Complex fv = f(z), bv = blaschke_product(z);
    if (std::abs(1.0 - fv) < 1e-14 || std::abs(1.0 - bv) < 1e-14)
        throw Error(Error::Code::domain, "chelst_h singular where f or B hits 1");
    return ((1.0 + fv) / (1.0 - fv)).real() - ((1.0 + bv) / (1.0 - bv)).real();
}

VerificationReport verify_chelst(const FunctionSpec& f, const FunctionSpec& blaschke_product,
                                 std::span<const Complex> points_where_b_is_1,
                                 const ToleranceMap& tol) {
    require_certificate(f);
    if (!std::holds_alternative<FunctionSpec::Blaschke>(blaschke_product.node()))
        throw Error(Error::Code::bad_input, "reference must be a Blaschke product");
    if (points_where_b_is_1.empty())
        throw Error(Error::Code::bad_input, "need at least one point with B = 1");

    VerificationReport report;
    report.verifier = "chelst";
    report.inputs_digest = describe_inputs("chelst " + f.kind(),
                                           {points_where_b_is_1.front(),
                                            Complex(static_cast<double>(points_where_b_is_1.size()), 0.0)});

    double h_floor, order_at_a, order_elsewhere, conclusion_sup, screen_tol;
    report.use_tolerance(tol, "h_floor", 1e-8, &h_floor);
    report.use_tolerance(tol, "order_at_a", 3.9, &order_at_a);
    report.use_tolerance(tol, "order_elsewhere", 1.9, &order_elsewhere);
    report.use_tolerance(tol, "conclusion_sup", 1e-7, &conclusion_sup);
    report.use_tolerance(tol, "b_equals_1_screen", 1e-8, &screen_tol);

    for (Complex a : points_where_b_is_1) {
        Complex lim = radial_limit(blaschke_product, a).value;
        if (std::abs(lim - 1.0) > screen_tol)
            throw Error(Error::Code::bad_input, "point fails the B = 1 screen");
    }

    // interior grid, keeping clear of the Cayley singularities at the B = 1 set
    std::vector<Complex> grid;
    for (Complex z : disc_grid(25, 40, 0.995)) {
        bool excluded = false;
        for (Complex a : points_where_b_is_1)
            excluded = excluded || std::abs(z - normalize_boundary(a)) < 1e-3;
        excluded = excluded || std::abs(1.0 - f(z)) < 1e-9 ||
                   std::abs(1.0 - blaschke_product(z)) < 1e-9;
        if (!excluded) grid.push_back(z);
    }
    std::vector<double> h_vals = map_indexed<double>(
        grid.size(), [&](std::size_t i) { return chelst_h(f, blaschke_product, grid[i]); });
    std::vector<double> diff_vals = map_indexed<double>(
        grid.size(), [&](std::size_t i) { return std::abs(f(grid[i]) - blaschke_product(grid[i])); });
    const Extreme h_min = min_of(h_vals);
    const Extreme diff_max = max_of(diff_vals);

    const bool clause_h = h_min.value >= -h_floor;
    report.record_slack(grid[h_min.index], h_min.value + h_floor);

    nlohmann::json orders = nlohmann::json::array();
    bool clause_a = true, clause_b = true;
    for (std::size_t i = 0; i < points_where_b_is_1.size(); ++i) {
        ContactFit fit = contact_order(f, blaschke_product, points_where_b_is_1[i]);
        const double gate = i == 0 ? order_at_a : order_elsewhere;
        const bool ok = fit.at_least(gate);
        if (i == 0)
            clause_a = ok;
        else
            clause_b = clause_b && ok;
        orders.push_back({{"point", complex_to_json(points_where_b_is_1[i])},
                          {"order", std::isinf(fit.order) ? nlohmann::json() : nlohmann::json(fit.order)},
                          {"required", gate},
                          {"holds", ok}});
    }

    const bool conclusion = diff_max.value < conclusion_sup;
    report.details["h_min"] = h_min.value;
    report.details["h_nonnegative"] = clause_h;
    report.details["contact_orders"] = orders;
    report.details["hypothesis_a"] = clause_a;
    report.details["hypothesis_b"] = clause_b;
    report.details["sup_difference"] = diff_max.value;
    report.details["conclusion"] = conclusion;

    if (clause_a && clause_b && !conclusion) {
        report.verdict = Verdict::violated; // counterexample to the statement
        report.witness = grid[diff_max.index];
    }
    return report;
}

} // namespace schwarz
