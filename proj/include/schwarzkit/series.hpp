#pragma once

#include <optional>
#include <vector>

#include "schwarzkit/types.hpp"

namespace schwarz {

// Truncated formal power series in 1 or 2 variables, vector-valued
// (one scalar series per component). All arithmetic truncates at
// max_degree; coefficients beyond it are never stored.
class PowerSeries {
public:
    PowerSeries(int vars, int components, int max_degree);

    int vars() const { return vars_; }
    int components() const { return components_; }
    int max_degree() const { return degree_; }

    // exponent (i, j); j must be 0 for one variable
    Complex coeff(int component, int i, int j = 0) const;
    void set_coeff(int component, int i, int j, Complex value);
    void add_coeff(int component, int i, int j, Complex value);

    static PowerSeries identity_map(int vars, int max_degree); // components = vars

    bool has_zero_constant_term(double tol = 0.0) const;
    bool linear_part_is_identity(double tol = 0.0) const;

    // lowest total degree > 1 carrying a nonzero coefficient (any component)
    std::optional<int> lowest_nonlinear_degree(double tol = 0.0) const;

    Complex evaluate(int component, Complex z1, Complex z2 = 0.0) const;

private:
    friend PowerSeries series_compose(const PowerSeries&, const PowerSeries&);
    int vars_;
    int components_;
    int degree_;
    // component-major, exponents flattened as i + j*(degree+1)
    std::vector<std::vector<Complex>> c_;
    std::size_t idx(int i, int j) const;
};

// Truncated composition f(g); g must have zero constant term and as many
// components as f has variables.
PowerSeries series_compose(const PowerSeries& f, const PowerSeries& g);

// phi composed with itself j times; phi's linear part must be the identity.
// The degree-k part of the result is exactly j times phi's (k the lowest
// nonlinear degree), even under truncation.
PowerSeries cartan_iterate(const PowerSeries& phi, int iterations);

// Growth-vs-Cauchy-estimate audit for the iteration argument: coefficients
// of phi^j at multidegree alpha grow like j*|c_alpha| while the Cauchy
// estimate on polydiscs D(0,a) <= domain <= D(0,b) caps |D^alpha phi^j(0)|
// at n*b*alpha!/a^k. Reports the first j breaking the cap.
struct CauchyEstimateReport {
    int lowest_degree = 0;                 // k
    double derivative_bound = 0.0;         // n*b*alpha!/a^k at the witness index
    double base_derivative_magnitude = 0.0;// |D^alpha phi(0)| at the witness index
    std::optional<int> first_violation_j;  // none if every j <= j_max obeys the cap
};
CauchyEstimateReport cauchy_estimate_check(const PowerSeries& phi, double a, double b, int j_max);

} // namespace schwarz
