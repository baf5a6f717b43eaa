#include "schwarzkit/ball.hpp"

#include <cmath>
#include <limits>

#include "schwarzkit/errors.hpp"
#include "schwarzkit/kernels.hpp"

namespace schwarz {

namespace {

bool unitary_within(const Eigen::Matrix2cd& u, double tol) {
    return (u.adjoint() * u - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() <= tol;
}

// projective 3x3 matrix of lambda_alpha acting on (z1, z2, 1)
Eigen::Matrix3cd lambda_matrix(Complex alpha) {
    const double beta = std::sqrt(1.0 - std::norm(alpha));
    Eigen::Matrix3cd m;
    m << Complex(1.0 - std::norm(alpha)), std::conj(alpha), Complex(std::norm(alpha)),
        -alpha * beta, Complex(beta), alpha * beta,
        Complex(0.0), std::conj(alpha), Complex(1.0);
    return m;
}

Eigen::Matrix3cd unitary_matrix(const Eigen::Matrix2cd& u) {
    Eigen::Matrix3cd m = Eigen::Matrix3cd::Zero();
    m.topLeftCorner<2, 2>() = u;
    m(2, 2) = 1.0;
    return m;
}

BallPoint apply_projective(const Eigen::Matrix3cd& m, const BallPoint& z) {
    Eigen::Vector3cd h(z.z1, z.z2, Complex(1.0));
    Eigen::Vector3cd w = m * h;
    return BallPoint{w(0) / w(2), w(1) / w(2)};
}

// Gram-Schmidt cleanup of rounding drift before the unitarity check.
Eigen::Matrix2cd orthonormalized(Eigen::Matrix2cd u) {
    Eigen::Vector2cd c0 = u.col(0).normalized();
    Eigen::Vector2cd c1 = u.col(1) - c0 * (c0.adjoint() * u.col(1))(0);
    u.col(0) = c0;
    u.col(1) = c1.normalized();
    return u;
}

} // namespace

BallPoint lambda_alpha(Complex alpha, const BallPoint& z) {
    if (std::abs(alpha) >= 1.0)
        throw Error(Error::Code::bad_input, "lambda_alpha needs |alpha| < 1");
    const double beta = std::sqrt(1.0 - std::norm(alpha));
    const Complex denom = 1.0 + std::conj(alpha) * z.z2;
    return BallPoint{((1.0 - std::norm(alpha)) * z.z1 + std::conj(alpha) * (z.z2 + alpha)) / denom,
                     beta * (-alpha * z.z1 + z.z2 + alpha) / denom};
}

BallAutomorphism::BallAutomorphism(Complex alpha, Eigen::Matrix2cd pre_unitary,
                                   Eigen::Matrix2cd post_unitary)
    : alpha_(alpha), pre_(std::move(pre_unitary)), post_(std::move(post_unitary)) {
    if (std::abs(alpha_) >= 1.0)
        throw Error(Error::Code::bad_input, "automorphism parameter needs |alpha| < 1");
    if (!unitary_within(pre_, 1e-12) || !unitary_within(post_, 1e-12))
        throw Error(Error::Code::bad_input, "automorphism factors must be unitary to 1e-12");
    mat_ = unitary_matrix(post_) * lambda_matrix(alpha_) * unitary_matrix(pre_);
    mat_ /= mat_(2, 2); // denominator at 0 never vanishes
    inv_ = mat_.inverse();
    inv_ /= inv_(2, 2);
}

BallAutomorphism BallAutomorphism::identity() {
    return BallAutomorphism(Complex(0.0), Eigen::Matrix2cd::Identity(),
                            Eigen::Matrix2cd::Identity());
}

BallAutomorphism BallAutomorphism::unitary(const Eigen::Matrix2cd& u) {
    return BallAutomorphism(Complex(0.0), u, Eigen::Matrix2cd::Identity());
}

BallPoint BallAutomorphism::operator()(const BallPoint& z) const { return apply_projective(mat_, z); }

BallPoint BallAutomorphism::apply_inverse(const BallPoint& w) const {
    return apply_projective(inv_, w);
}

BallAutomorphism BallAutomorphism::from_matrix(const Eigen::Matrix3cd& m) {
    const BallPoint c = apply_projective(m, BallPoint{0.0, 0.0});
    const double r = std::sqrt(c.norm_sq());

    auto extract_unitary = [](const Eigen::Matrix3cd& n) {
        // an automorphism fixing 0 is linear unitary: bottom row and last
        // column vanish after normalization
        Eigen::Matrix3cd s = n / n(2, 2);
        return orthonormalized(s.topLeftCorner<2, 2>());
    };

    if (r < 1e-14)
        return BallAutomorphism(Complex(0.0), extract_unitary(m), Eigen::Matrix2cd::Identity());

    // alpha real: |T(0)| determines it, a unitary carries p(alpha) onto T(0)
    const double alpha = r;
    const double beta = std::sqrt(1.0 - alpha * alpha);
    Eigen::Vector2cd image_dir;
    image_dir << c.z1 / r, c.z2 / r;
    Eigen::Vector2cd p_dir; // p(alpha)/|p(alpha)|
    p_dir << Complex(alpha), Complex(beta);
    auto orth = [](const Eigen::Vector2cd& v) {
        Eigen::Vector2cd w;
        w << -std::conj(v(1)), std::conj(v(0));
        return w;
    };
    Eigen::Matrix2cd frame_image, frame_p;
    frame_image << image_dir, orth(image_dir);
    frame_p << p_dir, orth(p_dir);
    Eigen::Matrix2cd post = frame_image * frame_p.adjoint();

    Eigen::Matrix3cd residual =
        lambda_matrix(Complex(alpha)).inverse() * unitary_matrix(post).adjoint() * m;
    return BallAutomorphism(Complex(alpha), extract_unitary(residual), post);
}

BallAutomorphism BallAutomorphism::inverse() const { return from_matrix(inv_); }

BallAutomorphism compose(const BallAutomorphism& s, const BallAutomorphism& t) {
    Eigen::Matrix3cd m = s.mat_ * t.mat_;
    return BallAutomorphism::from_matrix(m / m(2, 2));
}

BallAutomorphism automorphism_to_line(const BallPoint& a) {
    if (std::abs(a.z1 - 1.0) < 1e-14 && std::abs(a.z2) < 1e-14)
        throw Error(Error::Code::degenerate_line, "no interior line through (1,0) alone");
    if (a.norm_sq() >= 1.0)
        throw Error(Error::Code::bad_input, "slice base point must be interior");

    // lambda_alpha maps the slice {(zeta,0)} onto the slice of the line
    // through (1,0) with direction (-beta, alpha) and already fixes (1,0);
    // matching that direction with a - (1,0) pins alpha.
    const Complex v1 = a.z1 - 1.0, v2 = a.z2;
    const Complex q = -v2 / v1; // v1 != 0 for interior a
    const Complex alpha = q / std::sqrt(1.0 + std::norm(q));
    BallAutomorphism t(alpha, Eigen::Matrix2cd::Identity(), Eigen::Matrix2cd::Identity());

    // construction checks: fixed point and five slice probes on the line
    const BallPoint one = BallPoint::one();
    const BallPoint image_one = t(one);
    if (std::abs(image_one.z1 - 1.0) > 1e-10 || std::abs(image_one.z2) > 1e-10)
        throw Error(Error::Code::degenerate_line, "fixed point check failed");
    auto line_distance = [&](const BallPoint& w) {
        const Complex d1 = w.z1 - 1.0, d2 = w.z2;
        const Complex inner = d1 * std::conj(v1) + d2 * std::conj(v2);
        const double vv = std::norm(v1) + std::norm(v2);
        const Complex p1 = d1 - inner / vv * v1, p2 = d2 - inner / vv * v2;
        return std::sqrt(std::norm(p1) + std::norm(p2));
    };
    for (double x : {-0.8, -0.3, 0.0, 0.4, 0.9}) {
        const BallPoint w = t(BallPoint{Complex(x, 0.0), Complex(0.0, 0.0)});
        if (line_distance(w) > 1e-10)
            throw Error(Error::Code::degenerate_line, "slice image left the target line");
    }
    return t;
}

BallMap BallMap::identity() {
    return BallMap{[](BallPoint z) { return z; }, "identity"};
}

BallMap BallMap::from_automorphism(const BallAutomorphism& t) {
    return BallMap{[t](BallPoint z) { return t(z); }, "automorphism"};
}

BallMap BallMap::product(FunctionSpec z1_map, double z2_scale) {
    return BallMap{[f = std::move(z1_map), z2_scale](BallPoint z) {
                       return BallPoint{f(z.z1), z2_scale * z.z2};
                   },
                   "product"};
}

BallMap BallMap::composition(BallMap outer, BallMap inner) {
    return BallMap{[o = std::move(outer.eval), i = std::move(inner.eval)](BallPoint z) {
                       return o(i(z));
                   },
                   "composition"};
}

SelfMapCertificate certify_ball_map(const BallMap& phi, int grid) {
    const double r = 1.0 - 1e-6;
    const int n_psi = grid, n_angle = 2 * grid;
    std::vector<BallPoint> pts;
    pts.reserve(static_cast<std::size_t>(n_psi) * n_angle * n_angle / 4);
    for (int i = 0; i <= n_psi; ++i) {
        const double psi = 0.5 * kPi * i / n_psi;
        const double c = std::cos(psi), s = std::sin(psi);
        for (int j = 0; j < n_angle; ++j)
            for (int k = 0; k < n_angle; k += 2)
                pts.push_back(BallPoint{std::polar(r * c, kTwoPi * j / n_angle),
                                        std::polar(r * s, kTwoPi * k / n_angle)});
    }
    std::vector<double> norms = map_indexed<double>(
        pts.size(), [&](std::size_t i) { return std::sqrt(phi.eval(pts[i]).norm_sq()); });
    Extreme worst = max_of(norms);
    if (worst.value > 1.0 + 1e-9)
        throw Error(Error::Code::certification_failed, "ball map image norm " +
                                                           std::to_string(worst.value));
    return SelfMapCertificate{worst.value, static_cast<int>(pts.size()), 1.0 - worst.value};
}

SliceMap slice_map(const BallMap& phi, const BallPoint& a) {
    const BallAutomorphism chart = automorphism_to_line(a);
    auto g = [chart, eval = phi.eval](Complex zeta) {
        return chart.apply_inverse(eval(chart(BallPoint{zeta, Complex(0.0)})));
    };
    return SliceMap{[g](Complex zeta) { return g(zeta).z1; },
                    [g](Complex zeta) { return g(zeta).z2; }};
}

std::vector<BallPoint> default_slice_grid() {
    std::vector<BallPoint> grid{BallPoint{0.0, 0.0}};
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (double r : {0.3, 0.6}) {
        grid.push_back(BallPoint{Complex(r, 0.0), Complex(0.0, 0.0)});
        grid.push_back(BallPoint{Complex(0.0, 0.0), Complex(r, 0.0)});
        grid.push_back(BallPoint{Complex(r * inv_sqrt2, 0.0), Complex(r * inv_sqrt2, 0.0)});
        grid.push_back(BallPoint{Complex(r * inv_sqrt2, 0.0), Complex(0.0, r * inv_sqrt2)});
    }
    return grid;
}

BallRigidityVerdict burns_krantz_ball_classify(const BallMap& phi, std::vector<BallPoint> grid,
                                               const ToleranceMap& tol) {
    certify_ball_map(phi);
    const double g2_tol = tol.get("slice_g2_sup", 1e-7);

    BallRigidityVerdict out;
    out.identity = true;
    for (const BallPoint& a : grid) {
        SliceMap slice = slice_map(phi, a);
        // the induced disc map must itself be a certified self-map
        const double radius = 1.0 - 1e-6;
        CircleScan scan = max_modulus_on_circle(slice.h, radius, 512);
        if (scan.max_modulus > 1.0 + 1e-9)
            throw Error(Error::Code::certification_failed, "slice map is not a self-map");

        BallSliceResult result;
        result.a = a;
        result.verdict = burns_krantz_classify_eval(slice.h, 12, 0.5, tol);
        double sup = 0.0;
        for (double rr : {0.3, 0.6, 0.9, 1.0 - 1e-3, 1.0 - 1e-6})
            for (int k = 0; k < 64; ++k)
                sup = std::max(sup, std::abs(slice.g2(std::polar(rr, kTwoPi * k / 64.0))));
        result.g2_sup = sup;
        out.identity = out.identity && result.verdict.is_identity() && sup < g2_tol;
        out.slices.push_back(std::move(result));
    }
    return out;
}

DiscContactReport analytic_disc_contact(const std::function<BallPoint(Complex)>& disc,
                                        const DefiningFunction& rho, const BallPoint& p, int m) {
    std::vector<double> log_dist, log_rho;
    double max_dist = 0.0;
    for (double t : radial_schedule(4, 14)) {
        const BallPoint w = disc(Complex(t, 0.0));
        const double dist = std::sqrt(std::norm(w.z1 - p.z1) + std::norm(w.z2 - p.z2));
        max_dist = std::max(max_dist, dist);
        const double r = std::abs(rho(w));
        if (dist >= 1e-13 && r >= 1e-250) {
            log_dist.push_back(std::log(dist));
            log_rho.push_back(std::log(r));
        }
    }
    if (max_dist < 1e-13)
        throw Error(Error::Code::constant_disc, "analytic disc collapses to the point P");

    DiscContactReport report;
    report.type_bound = m;
    if (log_dist.size() < 2) {
        report.fit.order = std::numeric_limits<double>::infinity();
        report.within_bound = false;
        return report;
    }
    const double n = static_cast<double>(log_dist.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < log_dist.size(); ++i) {
        mx += log_dist[i];
        my += log_rho[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < log_dist.size(); ++i) {
        sxx += (log_dist[i] - mx) * (log_dist[i] - mx);
        sxy += (log_dist[i] - mx) * (log_rho[i] - my);
    }
    report.fit.order = sxy / sxx;
    const double intercept = my - report.fit.order * mx;
    report.fit.coefficient_modulus = std::exp(intercept);
    double ss = 0.0;
    for (std::size_t i = 0; i < log_dist.size(); ++i) {
        const double r = log_rho[i] - (report.fit.order * log_dist[i] + intercept);
        ss += r * r;
    }
    report.fit.residual = std::sqrt(ss / n);
    report.within_bound = report.fit.order <= static_cast<double>(m) + 0.1;
    return report;
}

} // namespace schwarz
