#pragma once

#include <functional>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "schwarzkit/disc.hpp"
#include "schwarzkit/herglotz.hpp"
#include "schwarzkit/kernels.hpp"
#include "schwarzkit/types.hpp"

namespace schwarz {

using ComplexFn = std::function<Complex(Complex)>;

// Numerical stand-in for the hypothesis "f maps the disc into the disc":
// |f| sampled on the circle of radius 1 - 1e-6. grid_size 0 marks variants
// that are self-maps for structural reasons (Blaschke products, automorphisms).
struct SelfMapCertificate {
    double max_boundary_modulus = 1.0;
    int grid_size = 0;
    double margin = 0.0; // 1 - max sampled interior modulus
};

// Symbolic holomorphic self-map of the disc with exact evaluation and exact
// first derivatives. Immutable; nodes are shared between copies.
class FunctionSpec {
public:
    struct Blaschke {
        double rotation = 0.0;          // e^{i rotation} prefactor
        std::vector<Complex> zeros;     // multiplicities as repeated zeros; |zero| < 1
    };
    struct HerglotzInduced {
        HerglotzData data;              // phi = (g-1)/(g+1), g the Herglotz transform
    };
    struct Polynomial {
        std::vector<Complex> coefficients; // sum c_k z^k
    };
    struct MoebiusMap {
        MoebiusTransform transform;
    };
    struct Composition {
        std::shared_ptr<const FunctionSpec> outer;
        std::shared_ptr<const FunctionSpec> inner; // must be certified disc-to-disc
    };
    using Node = std::variant<Blaschke, HerglotzInduced, Polynomial, MoebiusMap, Composition>;

    static FunctionSpec blaschke(double rotation, std::vector<Complex> zeros);
    static FunctionSpec identity() { return blaschke(0.0, {Complex(0.0, 0.0)}); }
    static FunctionSpec herglotz_induced(HerglotzData data);
    static FunctionSpec polynomial(std::vector<Complex> coefficients);
    static FunctionSpec moebius(MoebiusTransform t);
    static FunctionSpec compose(FunctionSpec outer, FunctionSpec inner);

    Complex operator()(Complex z) const;
    Complex derivative(Complex z) const;

    const Node& node() const { return *node_; }
    std::string kind() const;

    bool certified() const { return cert_ != nullptr; }
    const SelfMapCertificate* certificate() const { return cert_.get(); }

    ComplexFn evaluator() const;

private:
    friend FunctionSpec certify_self_map(const FunctionSpec&, int, Exec);
    std::shared_ptr<const Node> node_;
    std::shared_ptr<const SelfMapCertificate> cert_;
};

// Samples |f| at `grid` equispaced angles on the circle of radius 1 - 1e-6
// and attaches the certificate (grid >= 256). Blaschke products and
// automorphisms are certified structurally but still get a sampled margin.
// Throws CertificationFailed (with the worst point in the message) when
// max |f| > 1 + 1e-9.
FunctionSpec certify_self_map(const FunctionSpec& f, int grid = 512, Exec mode = default_exec());

// Taylor coefficients c_0..c_{n-1} at 0 by discrete Cauchy integrals on the
// circle of the given radius (0 < radius <= 0.9), with >= 8n sample points.
struct TaylorResult {
    std::vector<Complex> coefficients;
    double error_bound = 0.0; // radius^n / (1 - radius) * max sampled modulus
};
TaylorResult taylor_coefficients(const ComplexFn& f, int n, double radius = 0.5);
TaylorResult taylor_coefficients(const FunctionSpec& f, int n, double radius = 0.5);

} // namespace schwarz
