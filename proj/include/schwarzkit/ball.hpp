#pragma once

#include <array>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "schwarzkit/boundary.hpp"
#include "schwarzkit/rigidity.hpp"
#include "schwarzkit/types.hpp"

namespace schwarz {

struct BallPoint {
    Complex z1;
    Complex z2;

    double norm_sq() const { return std::norm(z1) + std::norm(z2); }
    static BallPoint one() { return {1.0, 0.0}; } // the distinguished boundary point (1, 0)
};

// The slice automorphism: fixes (1,0), maps the slice {(zeta,0)} onto the
// slice of the complex line through (|alpha|^2, alpha*sqrt(1-|alpha|^2)).
BallPoint lambda_alpha(Complex alpha, const BallPoint& z);

// post_unitary o lambda_alpha o pre_unitary, in canonical factored form.
// Internally the map is carried as a 3x3 projective matrix so that inverses
// and compositions stay exact; compositions are re-extracted into canonical
// form (alpha real >= 0) and validated pointwise.
class BallAutomorphism {
public:
    BallAutomorphism(Complex alpha, Eigen::Matrix2cd pre_unitary, Eigen::Matrix2cd post_unitary);

    static BallAutomorphism identity();
    static BallAutomorphism unitary(const Eigen::Matrix2cd& u);

    BallPoint operator()(const BallPoint& z) const;
    BallPoint apply_inverse(const BallPoint& w) const;

    BallAutomorphism inverse() const;

    Complex alpha() const { return alpha_; }
    const Eigen::Matrix2cd& pre_unitary() const { return pre_; }
    const Eigen::Matrix2cd& post_unitary() const { return post_; }

private:
    friend BallAutomorphism compose(const BallAutomorphism&, const BallAutomorphism&);
    static BallAutomorphism from_matrix(const Eigen::Matrix3cd& m);
    BallAutomorphism() = default;

    Complex alpha_;
    Eigen::Matrix2cd pre_, post_;
    Eigen::Matrix3cd mat_, inv_;
};

BallAutomorphism compose(const BallAutomorphism& s, const BallAutomorphism& t);

// Automorphism mapping the slice {(zeta, 0)} onto the slice of the line
// through a and (1,0), fixing (1,0); validated on construction (fixed point
// and five probe points on the line, to 1e-10). DegenerateLine for a = (1,0).
BallAutomorphism automorphism_to_line(const BallPoint& a);

// Holomorphic self-map of the ball, supplied as an evaluator.
struct BallMap {
    std::function<BallPoint(BallPoint)> eval;
    std::string name;

    static BallMap identity();
    static BallMap from_automorphism(const BallAutomorphism& t);
    // (f(z1), scale * z2); f must keep the pair inside the ball (certified on use)
    static BallMap product(FunctionSpec z1_map, double z2_scale);
    static BallMap composition(BallMap outer, BallMap inner);
};

// Samples |Phi| on the shell of radius 1 - 1e-6; throws CertificationFailed
// when the image norm exceeds 1 + 1e-9.
SelfMapCertificate certify_ball_map(const BallMap& phi, int grid = 24);

// Disc maps carved out of Phi by the slice chart at a:
//   G(zeta) = chart^{-1}(Phi(chart(zeta, 0))) = (h(zeta), g2(zeta)).
struct SliceMap {
    ComplexFn h;  // first coordinate: the induced disc self-map
    ComplexFn g2; // second coordinate: must vanish identically for rigid Phi
};
SliceMap slice_map(const BallMap& phi, const BallPoint& a);

// Default 9-point grid: the origin plus two shells (0.3, 0.6) in four
// complex directions.
std::vector<BallPoint> default_slice_grid();

struct BallSliceResult {
    BallPoint a;
    RigidityVerdict verdict;
    double g2_sup = 0.0;
};
struct BallRigidityVerdict {
    bool identity = false;
    std::vector<BallSliceResult> slices;
};

// Slice-wise rigidity classification: Identity iff every slice map is
// classified Identity and sup |g2| < 1e-7 on each slice.
BallRigidityVerdict burns_krantz_ball_classify(const BallMap& phi,
                                               std::vector<BallPoint> grid = default_slice_grid(),
                                               const ToleranceMap& tol = {});

// rho(z) = |z1|^2 + |z2|^2 - 1 for the unit ball.
struct DefiningFunction {
    double operator()(const BallPoint& z) const { return z.norm_sq() - 1.0; }
    // d(rho)/dz_k = conj(z_k)
    std::array<Complex, 2> gradient(const BallPoint& z) const {
        return {std::conj(z.z1), std::conj(z.z2)};
    }
};

// Decay exponent of |rho(disc(t))| against ||disc(t) - P|| along t = 1-2^{-j}.
// A type-m boundary point caps the exponent at m (m = 2 for the ball).
struct DiscContactReport {
    ContactFit fit;
    int type_bound = 2;
    bool within_bound = false;
};
DiscContactReport analytic_disc_contact(const std::function<BallPoint(Complex)>& disc,
                                        const DefiningFunction& rho, const BallPoint& p, int m);

} // namespace schwarz
