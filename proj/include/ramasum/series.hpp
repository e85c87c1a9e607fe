#ifndef RAMASUM_SERIES_HPP
#define RAMASUM_SERIES_HPP

#include <cstdint>
#include <vector>

#include "ramasum/rational.hpp"
#include "ramasum/special.hpp"

namespace ramasum {

// A pFq specification. The constructor rejects specs whose denominator
// parameters hit zero before the series terminates.
struct SeriesSpec {
    std::vector<ComplexScalar> numerator_params;
    std::vector<ComplexScalar> denominator_params;
    ComplexScalar argument{1.0, 0.0};

    SeriesSpec(std::vector<ComplexScalar> num, std::vector<ComplexScalar> den,
               ComplexScalar z = ComplexScalar(1.0, 0.0));
};

enum class Verdict { Terminating, ConvergentAtUnit, DivergentAtUnit, NotUnitArgument };

struct ConvergenceClass {
    ComplexScalar parameter_excess;  // sum of denominators - sum of numerators
    Verdict verdict;
    unsigned terminating_k = 0;  // verdict == Terminating: smallest n with numerator -n
};

enum class Termination { TerminatedExactly, ToleranceReached, MaxTermsReached, DivergenceDetected };

struct EvalResult {
    ComplexScalar value;
    double abs_error_estimate = 0.0;
    std::uint64_t terms_used = 0;
    Termination termination = Termination::ToleranceReached;
    std::uint64_t terminated_at = 0;  // terms summed when TerminatedExactly
};

ConvergenceClass classify(const SeriesSpec& spec);

// Term-recurrence summation with compensated accumulation. For convergent
// r = s+1 series at unit argument a power-law tail estimate from the last
// term is folded into the value; abs_error_estimate bounds what remains.
EvalResult evaluate(const SeriesSpec& spec, double tol = 1e-14,
                    std::uint64_t max_terms = 1000000);

// Exact rational value of a terminating series with rational parameters.
Rational evaluate_exact(const SeriesSpec& spec);

// Gauss 2F1(a,b;c;1) = Gamma(c) Gamma(c-a-b) / (Gamma(c-a) Gamma(c-b)).
ComplexScalar gauss_2f1_unit(ComplexScalar a, ComplexScalar b, ComplexScalar c);

}  // namespace ramasum

#endif
