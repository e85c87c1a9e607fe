#include "ramasum/special.hpp"

#include <cmath>
#include <limits>

namespace ramasum {

namespace {

// Lanczos coefficients, g = 607/128 = 4.7421875, 15 terms (Godfrey).
// Relative error of the rational part is a few ulps over Re z >= 0.5.
constexpr double lanczos_g = 4.7421875;
constexpr double lanczos_coeff[15] = {
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

constexpr double sqrt_2pi = 2.5066282746310005024;

// log Gamma(z) for Re z >= 0.5, via Gamma(z) = Gamma(z+1)/z.
ComplexScalar log_gamma_lanczos(ComplexScalar z) {
    ComplexScalar ser(lanczos_coeff[0], 0.0);
    for (int j = 1; j < 15; ++j) ser += lanczos_coeff[j] / (z + double(j));
    const ComplexScalar t = z + (lanczos_g + 0.5);
    return (z + 0.5) * std::log(t) - t + std::log(sqrt_2pi * ser / z);
}

// Asymptotic coefficients B_{2n}/(2n), n = 1..7 (through 1/z^14).
constexpr double digamma_asym[7] = {
    1.0 / 12.0,    -1.0 / 120.0,      1.0 / 252.0, -1.0 / 240.0,
    1.0 / 132.0,   -691.0 / 32760.0,  1.0 / 12.0,
};

ComplexScalar digamma_asymptotic(ComplexScalar w) {
    const ComplexScalar inv2 = 1.0 / (w * w);
    ComplexScalar sum(0.0, 0.0);
    ComplexScalar p = inv2;
    for (int n = 0; n < 7; ++n) {
        sum += digamma_asym[n] * p;
        p *= inv2;
    }
    return std::log(w) - 0.5 / w - sum;
}

}  // namespace

bool near_gamma_pole(ComplexScalar z, double tol) {
    if (std::abs(z.imag()) > tol) return false;
    const double r = std::round(z.real());
    return r <= 0.0 && std::abs(z.real() - r) <= tol;
}

ComplexScalar log_gamma(ComplexScalar z) {
    if (near_gamma_pole(z)) throw PoleError("log_gamma: argument at a nonpositive integer");
    if (z.real() >= 0.5) return log_gamma_lanczos(z);
    // Reflection: log Gamma(z) = log pi - log sin(pi z) - log Gamma(1-z).
    const ComplexScalar s = std::sin(constants::pi * z);
    return std::log(constants::pi) - std::log(s) - log_gamma_lanczos(1.0 - z);
}

ComplexScalar gamma(ComplexScalar z) {
    if (near_gamma_pole(z)) throw PoleError("gamma: argument at a nonpositive integer");
    const ComplexScalar lg = log_gamma(z);
    if (lg.real() > 709.0) throw OverflowError("gamma: |Gamma(z)| overflows double range");
    return std::exp(lg);
}

ComplexScalar digamma(ComplexScalar z) {
    if (near_gamma_pole(z)) throw PoleError("digamma: argument at a nonpositive integer");
    if (z.real() < 0.0) {
        // psi(z) = psi(1-z) - pi cot(pi z)
        const ComplexScalar piz = constants::pi * z;
        return digamma(1.0 - z) - constants::pi * std::cos(piz) / std::sin(piz);
    }
    ComplexScalar shift(0.0, 0.0);
    ComplexScalar w = z;
    while (w.real() < 12.0) {
        shift += 1.0 / w;
        w += 1.0;
    }
    return digamma_asymptotic(w) - shift;
}

ComplexScalar pochhammer(ComplexScalar alpha, unsigned k) {
    ComplexScalar p(1.0, 0.0);
    for (unsigned j = 0; j < k; ++j) p *= alpha + double(j);
    return p;
}

ComplexScalar harmonic_like_sum(ComplexScalar x) {
    return digamma(x + 1.0) + constants::euler_gamma;
}

}  // namespace ramasum
