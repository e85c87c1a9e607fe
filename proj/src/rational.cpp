#include "ramasum/rational.hpp"

#include <cmath>

namespace ramasum {

Rational rational_from(ComplexScalar z) {
    if (z.imag() != 0.0) throw NotRational("rational_from: nonzero imaginary part");
    const double x = z.real();
    if (!std::isfinite(x)) throw NotRational("rational_from: non-finite value");
    int exp = 0;
    const double m = std::frexp(x, &exp);
    // m * 2^53 is an exact integer for any finite double
    const long long mant = static_cast<long long>(std::ldexp(m, 53));
    exp -= 53;
    Rational q(mant);
    if (exp >= 0) {
        q *= Rational(boost::multiprecision::cpp_int(1) << exp);
    } else {
        q /= Rational(boost::multiprecision::cpp_int(1) << -exp);
    }
    return q;
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

Rational pochhammer_rational(const Rational& alpha, unsigned k) {
    Rational p = 1;
    for (unsigned j = 0; j < k; ++j) p *= alpha + j;
    return p;
}

}  // namespace ramasum
