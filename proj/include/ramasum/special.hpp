#ifndef RAMASUM_SPECIAL_HPP
#define RAMASUM_SPECIAL_HPP

#include <complex>

#include "ramasum/errors.hpp"

namespace ramasum {

using ComplexScalar = std::complex<double>;

namespace constants {
// Euler-Mascheroni constant, 20 digits.
inline constexpr double euler_gamma = 0.57721566490153286061;
inline constexpr double pi = 3.14159265358979323846;
inline constexpr double ln2 = 0.69314718055994530942;
inline constexpr double sqrt_pi = 1.77245385090551602730;
}  // namespace constants

// Arguments closer than this to a nonpositive integer are treated as poles.
inline constexpr double pole_tolerance = 1e-10;

// True when z sits within pole_tolerance of a nonpositive integer.
bool near_gamma_pole(ComplexScalar z, double tol = pole_tolerance);

// Gamma(z), relative error <= 1e-13 for |z| <= 170 away from poles.
// Throws PoleError near nonpositive integers, OverflowError when the
// result leaves the double range.
ComplexScalar gamma(ComplexScalar z);

// Principal-branch log Gamma(z), continuous on the plane cut along the
// negative real axis; exp(log_gamma(z)) == gamma(z) where representable.
ComplexScalar log_gamma(ComplexScalar z);

// Digamma psi(z) = Gamma'(z)/Gamma(z), absolute error <= 1e-13 for
// |z| <= 100 away from poles.
ComplexScalar digamma(ComplexScalar z);

// Rising factorial (alpha)_k = alpha (alpha+1) ... (alpha+k-1); (alpha)_0 = 1.
ComplexScalar pochhammer(ComplexScalar alpha, unsigned k);

// psi(x+1) + gamma: the harmonic-number extension (equals 1 + 1/2 + ... + 1/n
// at positive integers n).
ComplexScalar harmonic_like_sum(ComplexScalar x);

}  // namespace ramasum

#endif
