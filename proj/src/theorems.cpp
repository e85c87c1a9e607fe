#include "ramasum/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <limits>
#include <numeric>

namespace ramasum {

namespace {

bool near_nonpositive_integer(ComplexScalar z, double tol) {
    if (std::abs(z.imag()) > tol) return false;
    const double r = std::round(z.real());
    return r <= 0.0 && std::abs(z.real() - r) <= tol;
}

bool near_positive_integer(ComplexScalar z, double tol) {
    if (std::abs(z.imag()) > tol) return false;
    const double r = std::round(z.real());
    return r >= 1.0 && std::abs(z.real() - r) <= tol;
}

// Product of gammas as exp of log-gamma sums. A pole in a denominator
// argument annihilates the whole ratio; a pole in a numerator argument
// is a genuine error.
ComplexScalar gamma_ratio(std::initializer_list<ComplexScalar> nums,
                          std::initializer_list<ComplexScalar> dens) {
    for (auto d : dens)
        if (near_gamma_pole(d)) return ComplexScalar(0.0, 0.0);
    ComplexScalar lg(0.0, 0.0);
    for (auto n : nums) lg += log_gamma(n);
    for (auto d : dens) lg -= log_gamma(d);
    return std::exp(lg);
}

// tan(t)/t, stable through t = 0.
ComplexScalar tan_over_t(ComplexScalar t) {
    if (std::abs(t) < 1e-5) {
        const ComplexScalar t2 = t * t;
        return 1.0 + t2 / 3.0 + 2.0 * t2 * t2 / 15.0;
    }
    return std::tan(t) / t;
}

// exp(w) - 1 without cancellation for small w.
ComplexScalar cexpm1(ComplexScalar w) {
    if (std::abs(w) < 1e-4)
        return w * (1.0 + w * (0.5 + w * (1.0 / 6.0 + w / 24.0)));
    return std::exp(w) - 1.0;
}

}  // namespace

void TheoremInput::validate() const {
    if (near_nonpositive_integer(a, pole_tolerance) && std::abs(a) > pole_tolerance)
        throw InvalidInput("TheoremInput: a is a negative integer");
    if (x.real() >= double(N) + 2.0)
        throw InvalidInput("TheoremInput: Re x >= N+2, series diverges");
}

bool is_removable_x(const TheoremInput& input, double band) {
    if (near_positive_integer(input.x, band) &&
        std::round(input.x.real()) < double(input.N) + 2.0)
        return true;
    return near_nonpositive_integer(input.a - input.x + 1.0, band);
}

ComplexScalar theorem_3f2(const TheoremInput& input) {
    input.validate();
    if (std::abs(input.a) <= pole_tolerance) return ComplexScalar(1.0, 0.0);

    const ComplexScalar a = input.a;
    const ComplexScalar x = input.x;
    const double N = double(input.N);
    const ComplexScalar shifted = a - x + 1.0;

    if (near_gamma_pole(1.0 - x))
        throw PoleError("theorem_3f2: Gamma(1-x) pole, use theorem_3f2_limit");
    if (near_gamma_pole(shifted))
        throw PoleError("theorem_3f2: psi(a-x+1) pole, use theorem_3f2_limit");
    if (near_gamma_pole(a)) throw PoleError("theorem_3f2: psi(a) pole");

    const ComplexScalar prefactor =
        a * std::exp(log_gamma(a + N + 1.0) + log_gamma(1.0 - x) - log_gamma(shifted) -
                     std::lgamma(N + 1.0));
    const ComplexScalar bracket =
        digamma(shifted) - digamma(a) - digamma(ComplexScalar(N + 1.0, 0.0)) -
        constants::euler_gamma;

    ComplexScalar correction(0.0, 0.0);
    double kfact = 1.0;
    for (unsigned k = 1; k <= input.N; ++k) {
        kfact *= double(k);
        correction += pochhammer(a, k) * pochhammer(ComplexScalar(-N, 0.0), k) /
                      (double(k) * kfact * pochhammer(shifted, k));
    }
    return prefactor * (bracket - correction);
}

ComplexScalar theorem_3f2_limit(const TheoremInput& input) {
    input.validate();

    // Snap to the nearest removable point in x.
    ComplexScalar x0 = input.x;
    bool found = false;
    if (near_positive_integer(input.x, 1e-3) &&
        std::round(input.x.real()) < double(input.N) + 2.0) {
        x0 = ComplexScalar(std::round(input.x.real()), 0.0);
        found = true;
    } else {
        const ComplexScalar t = input.a - input.x + 1.0;
        if (std::abs(t.imag()) <= 1e-3) {
            const double n = std::round(-t.real());
            if (n >= 0.0 && std::abs(t.real() + n) <= 1e-3) {
                x0 = input.a + 1.0 + n;
                found = true;
            }
        }
    }
    if (!found) throw NotASingularity("theorem_3f2_limit: ordinary evaluation applies");

    const double h0 = 1e-3;
    auto g = [&](double h) {
        TheoremInput p = input;
        p.x = x0 + h;
        TheoremInput m = input;
        m.x = x0 - h;
        return 0.5 * (theorem_3f2(p) + theorem_3f2(m));
    };
    const ComplexScalar g1 = g(h0), g2 = g(h0 / 2.0), g3 = g(h0 / 4.0);
    const ComplexScalar r1 = (4.0 * g2 - g1) / 3.0;
    const ComplexScalar r2 = (4.0 * g3 - g2) / 3.0;
    const ComplexScalar r3 = (16.0 * r2 - r1) / 15.0;
    if (std::abs(r3 - r2) > 1e-6 * (1.0 + std::abs(r3)))
        throw ExtrapolationUnstable("theorem_3f2_limit: extrapolants disagree");
    return r3;
}

RoutedValue theorem_3f2_auto(const TheoremInput& input) {
    input.validate();
    RoutedValue out;
    if (is_removable_x(input, 1e-4)) {
        out.value = theorem_3f2_limit(input);
        out.limit_path = true;
        return out;
    }
    out.value = theorem_3f2(input);
    out.cancellation_warning = is_removable_x(input, 1e-2);
    return out;
}

ComplexScalar ramanujan_entry_16(ComplexScalar x) {
    if (x.real() >= 2.0) throw InvalidInput("ramanujan_entry_16: Re x >= 2");
    TheoremInput reduced{ComplexScalar(0.5, 0.0), x, 0};
    if (is_removable_x(reduced, 1e-4)) return theorem_3f2_limit(reduced);
    return 0.25 * constants::sqrt_pi * std::exp(log_gamma(1.0 - x) - log_gamma(1.5 - x)) *
           (digamma(1.5 - x) - digamma(ComplexScalar(0.5, 0.0)));
}

NegIntValue negative_integer_20(unsigned k) {
    NegIntValue out;
    Rational h = 0;
    for (unsigned j = 1; j <= k + 1; ++j) h += Rational(1, 2 * j - 1);
    out.coeff = h / 2;
    // sqrt(pi) Gamma(k+1) / Gamma(3/2+k) = k! / (1/2)_{k+1}, a rational
    Rational kfact = 1;
    for (unsigned j = 2; j <= k; ++j) kfact *= j;
    out.exact = out.coeff * kfact / pochhammer_rational(Rational(1, 2), k + 1);
    out.value = 0.5 * constants::sqrt_pi * to_double(h) *
                std::exp(std::lgamma(double(k) + 1.0) - std::lgamma(double(k) + 1.5));
    return out;
}

TransformResult transform_two_term(const TransformParams& p, double tol) {
    const ComplexScalar ab = p.a - p.b;
    if (std::abs(ab.imag()) <= 1e-8 && std::abs(ab.real() - std::round(ab.real())) <= 1e-8)
        throw DegenerateParameters("transform_two_term: a-b is an integer");
    const ComplexScalar excess = p.d + p.e - p.a - p.b - p.c;
    for (auto z : {p.d, p.e, excess})
        if (near_gamma_pole(z)) throw PoleError("transform_two_term: numerator gamma pole");

    SeriesSpec lhs_spec({p.a, p.b, p.c}, {p.d, p.e});
    SeriesSpec s1({p.b, p.d - p.a, p.e - p.a}, {1.0 - p.a + p.b, p.d + p.e - p.a - p.c});
    SeriesSpec s2({p.a, p.d - p.b, p.e - p.b}, {p.d + p.e - p.b - p.c, 1.0 + p.a - p.b});
    for (const auto* s : {&lhs_spec, &s1, &s2}) {
        if (classify(*s).verdict == Verdict::DivergentAtUnit)
            throw ConvergenceViolation("transform_two_term: constituent series diverges");
    }

    TransformResult out;
    out.lhs = evaluate(lhs_spec, tol).value;
    const ComplexScalar pre1 =
        gamma_ratio({ab, p.d, p.e, excess}, {p.a, p.d - p.b, p.e - p.b, p.d + p.e - p.a - p.c});
    const ComplexScalar pre2 =
        gamma_ratio({-ab, p.d, p.e, excess}, {p.b, p.d - p.a, p.e - p.a, p.d + p.e - p.b - p.c});
    out.rhs = ComplexScalar(0.0, 0.0);
    if (pre1 != ComplexScalar(0.0, 0.0)) out.rhs += pre1 * evaluate(s1, tol).value;
    if (pre2 != ComplexScalar(0.0, 0.0)) out.rhs += pre2 * evaluate(s2, tol).value;
    out.residual = std::abs(out.lhs - out.rhs) / (1.0 + std::abs(out.lhs));
    return out;
}

TransformResult transform_one_term(const TransformParams& p, double tol) {
    const ComplexScalar excess = p.d + p.e - p.a - p.b - p.c;
    if (near_gamma_pole(p.e - p.a) || near_gamma_pole(p.d + p.e - p.b - p.c))
        throw PoleError("transform_one_term: prefactor denominator pole");
    for (auto z : {p.e, excess})
        if (near_gamma_pole(z)) throw PoleError("transform_one_term: numerator gamma pole");

    SeriesSpec lhs_spec({p.a, p.b, p.c}, {p.d, p.e});
    SeriesSpec rhs_spec({p.a, p.d - p.b, p.d - p.c}, {p.d, p.d + p.e - p.b - p.c});
    for (const auto* s : {&lhs_spec, &rhs_spec}) {
        if (classify(*s).verdict == Verdict::DivergentAtUnit)
            throw ConvergenceViolation("transform_one_term: constituent series diverges");
    }

    TransformResult out;
    out.lhs = evaluate(lhs_spec, tol).value;
    out.rhs = gamma_ratio({p.e, excess}, {p.e - p.a, p.d + p.e - p.b - p.c}) *
              evaluate(rhs_spec, tol).value;
    out.residual = std::abs(out.lhs - out.rhs) / (1.0 + std::abs(out.lhs));
    return out;
}

ProofReplayTrace proof_replay(const TheoremInput& input, const std::vector<double>& eps_list) {
    input.validate();
    if (input.x.real() >= 1.0)
        throw InvalidInput("proof_replay: requires Re x < 1 (the proof's working region)");

    const ComplexScalar a = input.a;
    const ComplexScalar x = input.x;
    const double N = double(input.N);
    const ComplexScalar closed = theorem_3f2(input);

    ProofReplayTrace trace;
    trace.closed_form = closed;
    for (double eps : eps_list) {
        const ComplexScalar e(eps, 0.0);
        // log of line 1 (with Gamma(eps) written as Gamma(1+eps)/eps)
        const ComplexScalar logA = log_gamma(1.0 + a - e) + log_gamma(1.0 + e) +
                                   log_gamma(1.0 + a - e + N) + log_gamma(1.0 - x) -
                                   log_gamma(a) - std::lgamma(N + 1.0) -
                                   log_gamma(1.0 + a - e - x);
        const ComplexScalar logB = log_gamma(1.0 + a - e) + log_gamma(1.0 + a - e + N) +
                                   log_gamma(1.0 - x) - log_gamma(a - e) -
                                   log_gamma(1.0 - e + N) - log_gamma(1.0 + a - x);
        ComplexScalar w = logA - logB;
        const double mag = std::abs(logA) + std::abs(logB);
        bool flagged = false;
        if (mag > 1e8 * std::abs(w)) {
            // more than ~8 digits cancel: rebuild w from midpoint digamma
            // differences of the paired log-gamma terms
            flagged = true;
            const ComplexScalar he = 0.5 * e;
            w = e * (digamma(1.0 + he) - digamma(a - he) -
                     digamma(1.0 + N - he) + digamma(1.0 + a - x - he));
        }
        const ComplexScalar B = std::exp(logB);
        const ComplexScalar bracket = B * cexpm1(w) / e;

        ComplexScalar finite(0.0, 0.0);
        double kfact = 1.0;
        for (unsigned k = 1; k <= input.N; ++k) {
            kfact *= double(k);
            finite += pochhammer(a, k) * pochhammer(e - N, k) /
                      (kfact * (double(k) + e) * pochhammer(1.0 + a - x, k));
        }

        // k >= N+1 tail; every term carries the factor eps
        ComplexScalar tail(0.0, 0.0);
        {
            const unsigned k0 = input.N + 1;
            double k0fact = 1.0;
            for (unsigned j = 2; j <= k0; ++j) k0fact *= double(j);
            ComplexScalar t = pochhammer(a, k0) * pochhammer(e - N, k0) /
                              (k0fact * (double(k0) + e) * pochhammer(1.0 + a - x, k0));
            double k = double(k0);
            for (int it = 0; it < 200000; ++it) {
                tail += t;
                if (std::abs(t) <= 1e-18 * (1.0 + std::abs(tail))) break;
                t *= (a + k) * (e - N + k) * (k + e) /
                     ((k + 1.0) * (1.0 + a - x + k) * (k + 1.0 + e));
                k += 1.0;
            }
        }

        const ComplexScalar four_line = bracket - B * finite - B * tail;
        trace.epsilon_values.push_back(eps);
        trace.approximations.push_back(four_line);
        trace.residuals.push_back(std::abs(four_line - closed));
        trace.tail_magnitudes.push_back(std::abs(B * tail));
        trace.cancellation_flagged.push_back(flagged);
    }

    // log-log slope of residual vs eps via least squares
    const std::size_t n = trace.epsilon_values.size();
    if (n >= 2) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const double lx = std::log(trace.epsilon_values[i]);
            const double ly = std::log(std::max(trace.residuals[i], 1e-300));
            sx += lx;
            sy += ly;
            sxx += lx * lx;
            sxy += lx * ly;
        }
        trace.fitted_order = (double(n) * sxy - sx * sy) / (double(n) * sxx - sx * sx);
    }
    return trace;
}

FactorCheck entry_factor_check(ComplexScalar x) {
    if (std::abs(x) <= pole_tolerance) throw PoleError("entry_factor_check: x = 0");
    if (std::abs(x.imag()) <= pole_tolerance &&
        std::abs(x.real() - std::round(x.real())) <= pole_tolerance)
        throw PoleError("entry_factor_check: tan(pi x) zero at integer x");
    if (near_gamma_pole(1.0 - x) || near_gamma_pole(1.5 - x) || near_gamma_pole(x + 1.0))
        throw PoleError("entry_factor_check: gamma factor pole");
    const ComplexScalar u = 2.0 * x + 1.0;
    if (near_gamma_pole(u) && std::abs(u.imag()) <= pole_tolerance &&
        std::fmod(std::round(u.real()), 2.0) != 0.0)
        throw PoleError("entry_factor_check: Gamma(2x+1) pole");

    const ComplexScalar pow_denom =
        std::exp(2.0 * (x * constants::ln2 + log_gamma(x + 1.0)));  // (2^x Gamma(x+1))^2

    FactorCheck out;
    const ComplexScalar dx_half = x - 0.5;
    if (std::abs(dx_half) < 0.1) {
        // pi/tan(pi x) / (1-2x) -> pi tan(pi d)/(2d), d = x - 1/2
        const ComplexScalar cot_part =
            constants::pi * tan_over_t(constants::pi * dx_half) * constants::pi / 2.0;
        out.factor2 = cot_part * gamma(u) / pow_denom;
    } else if (std::abs(u.imag()) <= 0.25 &&
               std::abs(u.real() - std::round(u.real())) < 0.25 &&
               std::round(u.real()) <= 0.0 && std::fmod(std::round(u.real()), 2.0) == 0.0) {
        // x near a negative half-integer: Gamma(2x+1) pole cancels the
        // tan zero. With v = 2x+1+2m:
        //   pi cot(pi x) Gamma(2x+1)
        //     = -pi (tan(pi v/2)/v) Gamma(v+1) / prod_{j=1..2m}(v-j)
        const double m = -std::round(u.real()) / 2.0;
        const ComplexScalar v = u + 2.0 * m;
        ComplexScalar denom_prod(1.0, 0.0);
        for (int j = 1; j <= int(2.0 * m); ++j) denom_prod *= v - double(j);
        const ComplexScalar bracket = -constants::pi * (constants::pi / 2.0) *
                                      tan_over_t(constants::pi * v / 2.0) * gamma(v + 1.0) /
                                      denom_prod;
        out.factor2 = bracket / (pow_denom * (1.0 - 2.0 * x));
    } else {
        const ComplexScalar pix = constants::pi * x;
        out.factor2 = constants::pi * std::cos(pix) / std::sin(pix) * gamma(u) /
                      (pow_denom * (1.0 - 2.0 * x));
    }

    out.corrected =
        0.5 * constants::sqrt_pi * std::exp(log_gamma(1.0 - x) - log_gamma(1.5 - x));
    out.ratio = out.corrected / out.factor2;
    const ComplexScalar faktor_rhs = out.corrected / x;
    out.faktor_residual = std::abs(out.factor2 - faktor_rhs) / (1.0 + std::abs(faktor_rhs));
    return out;
}

ChainCheck digamma_chain_check(ComplexScalar x) {
    if (near_gamma_pole(2.0 * x + 1.0) || near_gamma_pole(x + 1.0) ||
        near_gamma_pole(1.5 - x))
        throw PoleError("digamma_chain_check: digamma argument pole");
    if (std::abs(x.imag()) <= pole_tolerance) {
        const double r = std::round(x.real() - 0.5);
        if (std::abs(x.real() - 0.5 - r) <= pole_tolerance && r != 0.0)
            throw PoleError("digamma_chain_check: tan(pi x) pole");
    }

    const ComplexScalar t = x - 0.5;
    ComplexScalar pole_pair;  // 1/(1-2x) - (pi/2) tan(pi x)
    if (std::abs(t) < 5e-3) {
        // both terms are O(1/t); the combined expansion in t = x - 1/2:
        const ComplexScalar t2 = t * t;
        const double pi2 = constants::pi * constants::pi;
        pole_pair = -t * (pi2 / 6.0 + t2 * (pi2 * pi2 / 90.0 + t2 * pi2 * pi2 * pi2 / 945.0));
    } else {
        pole_pair = 1.0 / (1.0 - 2.0 * x) -
                    0.5 * constants::pi * std::tan(constants::pi * x);
    }

    ChainCheck out;
    out.expr6 = digamma(2.0 * x + 1.0) + constants::euler_gamma -
                0.5 * (digamma(x + 1.0) + constants::euler_gamma) + pole_pair;
    out.expr15 = 0.5 * (digamma(1.5 - x) - digamma(ComplexScalar(0.5, 0.0)));
    out.residual = std::abs(out.expr6 - out.expr15);
    return out;
}

}  // namespace ramasum
