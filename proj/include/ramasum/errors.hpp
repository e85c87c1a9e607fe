#ifndef RAMASUM_ERRORS_HPP
#define RAMASUM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ramasum {

// Base class for all domain errors thrown by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Argument within pole tolerance of a nonpositive integer (gamma/digamma),
// or a prefactor hits a gamma pole that no limit handler removes.
struct PoleError : Error {
    explicit PoleError(const std::string& msg) : Error(msg) {}
};

// |Gamma(z)| exceeds the double range; caller should switch to log_gamma.
struct OverflowError : Error {
    explicit OverflowError(const std::string& msg) : Error(msg) {}
};

// A SeriesSpec whose denominator parameters would hit zero before the
// series terminates, or is otherwise malformed.
struct InvalidSpec : Error {
    explicit InvalidSpec(const std::string& msg) : Error(msg) {}
};

// A closed form was requested outside its convergence region.
struct ConvergenceViolation : Error {
    explicit ConvergenceViolation(const std::string& msg) : Error(msg) {}
};

// Transformation prefactors degenerate (e.g. a - b integral in the
// two-term transformation).
struct DegenerateParameters : Error {
    explicit DegenerateParameters(const std::string& msg) : Error(msg) {}
};

struct NotTerminating : Error {
    explicit NotTerminating(const std::string& msg) : Error(msg) {}
};

struct NotRational : Error {
    explicit NotRational(const std::string& msg) : Error(msg) {}
};

// Limit evaluation requested at a point where ordinary evaluation applies.
struct NotASingularity : Error {
    explicit NotASingularity(const std::string& msg) : Error(msg) {}
};

// Successive Richardson extrapolants disagree beyond tolerance.
struct ExtrapolationUnstable : Error {
    explicit ExtrapolationUnstable(const std::string& msg) : Error(msg) {}
};

// TheoremInput (or similar) invariant violation.
struct InvalidInput : Error {
    explicit InvalidInput(const std::string& msg) : Error(msg) {}
};

}  // namespace ramasum

#endif
