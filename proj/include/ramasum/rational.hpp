#ifndef RAMASUM_RATIONAL_HPP
#define RAMASUM_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include "ramasum/errors.hpp"
#include "ramasum/special.hpp"

namespace ramasum {

using Rational = boost::multiprecision::cpp_rational;

// Exact conversion of a dyadic double (every finite double is rational).
// Throws NotRational for a parameter with nonzero imaginary part.
Rational rational_from(ComplexScalar z);

double to_double(const Rational& q);

// Rising factorial over exact rationals.
Rational pochhammer_rational(const Rational& alpha, unsigned k);

}  // namespace ramasum

#endif
