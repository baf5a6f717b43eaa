#pragma once

#include <stdexcept>
#include <string>

namespace schwarz {

// Single exception type for all checked failure modes; the code tells
// callers (and tests) which contract was broken.
class Error : public std::runtime_error {
public:
    enum class Code {
        domain,                     // evaluation outside the operation's domain
        certification_failed,       // self-map check found |f| > 1 + tol
        certification_missing,      // verifier given an uncertified map
        non_convergent,             // boundary extrapolation did not settle
        not_unimodular_limit,       // radial limit off the unit circle
        not_origin_fixing,          // verifier requires f(0) = 0
        not_nonnegative,            // harmonic test function changes sign
        not_vanishing_at_p,         // u(P) != 0
        collar_hypothesis_violated, // u < 0 somewhere on the collar
        constant_disc,              // analytic disc collapses to a point
        degenerate_line,            // no complex line through the data
        nonzero_constant_term,      // series composition needs g(0) = 0
        linear_part_not_identity,   // Cartan iteration hypothesis
        not_psd,                    // moment sequence fails the Herglotz criterion
        bad_input,                  // malformed file / config
    };

    Error(Code code, const std::string& what) : std::runtime_error(what), code_(code) {}

    Code code() const { return code_; }

private:
    Code code_;
};

} // namespace schwarz
