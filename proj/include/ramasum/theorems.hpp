#ifndef RAMASUM_THEOREMS_HPP
#define RAMASUM_THEOREMS_HPP

#include <vector>

#include "ramasum/series.hpp"

namespace ramasum {

// Input triple of the 3F2(a,a,x; 1+a,1+a+N; 1) summation formula.
struct TheoremInput {
    ComplexScalar a;
    ComplexScalar x;
    unsigned N = 0;

    // Throws InvalidInput when a is a negative integer, Re x >= N+2, or
    // a-x+1 is a nonpositive integer away from the removable set.
    void validate() const;
};

struct TransformParams {
    ComplexScalar a, b, c, d, e;
};

struct TransformResult {
    ComplexScalar lhs, rhs;
    double residual = 0.0;  // |lhs-rhs|/(1+|lhs|)
};

struct ProofReplayTrace {
    std::vector<double> epsilon_values;        // strictly decreasing
    std::vector<double> residuals;             // distance to the closed form
    std::vector<ComplexScalar> approximations; // four-line value per epsilon
    std::vector<double> tail_magnitudes;       // |k >= N+1 tail|, O(eps)
    std::vector<bool> cancellation_flagged;
    ComplexScalar closed_form{0.0, 0.0};
    double fitted_order = 0.0;                 // log-log slope, expected ~1
};

struct FactorCheck {
    ComplexScalar factor2;     // Ramanujan's left-hand factor
    ComplexScalar corrected;   // Gauss value sqrt(pi) G(1-x) / (2 G(3/2-x))
    ComplexScalar ratio;       // corrected / factor2, equals x
    double faktor_residual = 0.0;  // factor2 vs sqrt(pi) G(1-x)/(2x G(3/2-x))
};

struct ChainCheck {
    ComplexScalar expr6;   // digamma rendering of Ramanujan's factor
    ComplexScalar expr15;  // (1/2)(psi(3/2-x) - psi(1/2))
    double residual = 0.0;
};

struct NegIntValue {
    Rational coeff;  // value = coeff * sqrt(pi) Gamma(k+1) / Gamma(3/2+k)
    Rational exact;  // fully rational value of the terminating series
    double value = 0.0;
};

// Closed form of the summation theorem. Direct evaluation; throws PoleError
// within pole tolerance of the removable x-singularities (use
// theorem_3f2_limit there).
ComplexScalar theorem_3f2(const TheoremInput& input);

// Two-sided Richardson limit of theorem_3f2 at a removable singularity in x.
ComplexScalar theorem_3f2_limit(const TheoremInput& input);

// Routed evaluation: removable-band inputs go to the limit path.
struct RoutedValue {
    ComplexScalar value;
    bool limit_path = false;
    bool cancellation_warning = false;
};
RoutedValue theorem_3f2_auto(const TheoremInput& input);

// True when x sits within `band` of a removable singularity of the closed form.
bool is_removable_x(const TheoremInput& input, double band = 1e-4);

// Ramanujan's (XII,43,Ex.7) in contemporary form; routes x near 1 and 3/2
// to the limit path.
ComplexScalar ramanujan_entry_16(ComplexScalar x);

// Closed form at x = -k: (sqrt(pi)/2)(Gamma(k+1)/Gamma(3/2+k)) sum 1/(2j-1).
NegIntValue negative_integer_20(unsigned k);

// Two-term nonterminating 3F2(1) transformation; lhs/rhs both evaluated
// through the direct-series oracle.
TransformResult transform_two_term(const TransformParams& p, double tol = 1e-14);

// One-term 3F2(1) transformation.
TransformResult transform_one_term(const TransformParams& p, double tol = 1e-14);

// Replays the eps -> 0 limit of the proof's four-line expression.
ProofReplayTrace proof_replay(const TheoremInput& input, const std::vector<double>& eps_list);

// Ramanujan's entry factor vs the Gauss value; ratio recovers the missing x.
FactorCheck entry_factor_check(ComplexScalar x);

// The digamma expression chain: Ramanujan's factor rendered via psi equals
// (1/2)(psi(3/2-x) - psi(1/2)).
ChainCheck digamma_chain_check(ComplexScalar x);

}  // namespace ramasum

#endif
