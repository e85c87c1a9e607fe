#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ramasum/theorems.hpp"

using namespace ramasum;

namespace {

TheoremInput in(double a, double x, unsigned N) {
    return TheoremInput{ComplexScalar(a, 0.0), ComplexScalar(x, 0.0), N};
}

double rel(ComplexScalar got, ComplexScalar want) {
    return std::abs(got - want) / (1.0 + std::abs(want));
}

}  // namespace

TEST_CASE("theorem input validation") {
    CHECK_THROWS_AS(in(-2.0, 0.0, 1).validate(), InvalidInput);
    CHECK_THROWS_AS(in(0.5, 2.5, 0).validate(), InvalidInput);
    CHECK_NOTHROW(in(0.0, 0.5, 0).validate());
    CHECK_NOTHROW(in(0.5, 1.9, 0).validate());
}

TEST_CASE("theorem_3f2 examples") {
    // bracket vanishes, k=1 correction carries the value
    CHECK(rel(theorem_3f2(in(1.0, 0.0, 1)), {1.0, 0.0}) < 1e-13);
    // a=1/2, x=-1, N=0: the terminating-series value 8/9
    CHECK(rel(theorem_3f2(in(0.5, -1.0, 0)), {8.0 / 9.0, 0.0}) < 1e-13);
    // a=0 degenerates to 1
    CHECK(theorem_3f2(in(0.0, 0.3, 2)) == ComplexScalar(1.0, 0.0));
}

TEST_CASE("theorem_3f2 vs direct series") {
    for (double a : {0.4, 1.1, 2.3}) {
        for (double x : {-2.5, -0.7, 0.4}) {
            for (unsigned N : {0u, 1u, 3u}) {
                const ComplexScalar closed = theorem_3f2(in(a, x, N));
                const ComplexScalar series =
                    evaluate(SeriesSpec({{a, 0.0}, {a, 0.0}, {x, 0.0}},
                                        {{a + 1.0, 0.0}, {a + 1.0 + N, 0.0}}),
                             1e-13, 400000)
                        .value;
                CHECK(rel(closed, series) < 1e-10);
            }
        }
    }
}

TEST_CASE("theorem_3f2_limit golden values") {
    CHECK(std::abs(theorem_3f2_limit(in(0.5, 1.0, 0)).real() -
                   constants::pi * constants::pi / 8.0) < 1e-8);
    CHECK(std::abs(theorem_3f2_limit(in(0.5, 1.5, 0)).real() - constants::pi / 2.0) < 1e-8);
    CHECK(std::abs(theorem_3f2_limit(in(1.0, 1.0, 0)).real() -
                   constants::pi * constants::pi / 6.0) < 1e-8);
    CHECK_THROWS_AS(theorem_3f2_limit(in(0.5, 0.3, 0)), NotASingularity);
}

TEST_CASE("auto routing") {
    const RoutedValue direct = theorem_3f2_auto(in(0.5, 0.3, 0));
    CHECK_FALSE(direct.limit_path);
    const RoutedValue limited = theorem_3f2_auto(in(0.5, 1.0 + 2e-5, 0));
    CHECK(limited.limit_path);
    CHECK(std::abs(limited.value.real() - constants::pi * constants::pi / 8.0) < 1e-6);
    const RoutedValue warned = theorem_3f2_auto(in(0.5, 0.999, 1));
    CHECK_FALSE(warned.limit_path);
    CHECK(warned.cancellation_warning);
}

TEST_CASE("ramanujan_entry_16") {
    CHECK(rel(ramanujan_entry_16({0.0, 0.0}), {1.0, 0.0}) < 1e-13);
    CHECK(rel(ramanujan_entry_16({-1.0, 0.0}), {8.0 / 9.0, 0.0}) < 1e-13);
    CHECK(std::abs(ramanujan_entry_16({0.5, 0.0}).real() -
                   constants::pi * constants::ln2 / 2.0) < 1e-13);
    // x = 3/2 routes to the limit path
    CHECK(std::abs(ramanujan_entry_16({1.5, 0.0}).real() - constants::pi / 2.0) < 1e-8);
    CHECK_THROWS_AS(ramanujan_entry_16({2.5, 0.0}), InvalidInput);

    // reduction: matches theorem_3f2 with a=1/2, N=0
    for (double x : {-3.3, -1.2, 0.2, 0.8}) {
        CHECK(rel(ramanujan_entry_16({x, 0.0}), theorem_3f2(in(0.5, x, 0))) < 1e-13);
    }
}

TEST_CASE("negative_integer_20") {
    const NegIntValue v0 = negative_integer_20(0);
    CHECK(v0.exact == Rational(1));
    CHECK(std::abs(v0.value - 1.0) < 1e-14);
    CHECK(negative_integer_20(1).exact == Rational(8, 9));
    CHECK(negative_integer_20(2).exact == Rational(184, 225));
    for (unsigned k = 0; k <= 30; ++k) {
        const NegIntValue v = negative_integer_20(k);
        const Rational series = evaluate_exact(
            SeriesSpec({{0.5, 0.0}, {0.5, 0.0}, {-double(k), 0.0}}, {{1.5, 0.0}, {1.5, 0.0}}));
        CHECK(v.exact == series);
        CHECK(std::abs(v.value - to_double(series)) <= 1e-13 * to_double(series));
    }
}

TEST_CASE("transform_two_term") {
    TransformResult r = transform_two_term({{0.3, 0.0}, {0.7, 0.0}, {-0.2, 0.0},
                                            {1.4, 0.0}, {1.9, 0.0}});
    CHECK(r.residual <= 1e-10);

    // c = 0: both sides collapse to 1
    r = transform_two_term({{0.3, 0.0}, {0.7, 0.0}, {0.0, 0.0}, {1.4, 0.0}, {1.9, 0.0}});
    CHECK(std::abs(r.lhs - ComplexScalar(1.0, 0.0)) < 1e-14);
    CHECK(r.residual <= 1e-12);

    // terminating c
    r = transform_two_term({{0.5, 0.0}, {1.1, 0.0}, {-3.0, 0.0}, {2.2, 0.0}, {2.6, 0.0}});
    CHECK(r.residual <= 1e-11);

    CHECK_THROWS_AS(transform_two_term({{0.5, 0.0}, {1.5, 0.0}, {-0.2, 0.0},
                                        {1.4, 0.0}, {1.9, 0.0}}),
                    DegenerateParameters);
}

TEST_CASE("transform_one_term") {
    TransformResult r = transform_one_term({{0.4, 0.0}, {0.6, 0.0}, {-0.3, 0.0},
                                            {1.5, 0.0}, {1.8, 0.0}});
    CHECK(r.residual <= 1e-10);

    r = transform_one_term({{0.0, 0.0}, {0.6, 0.0}, {-0.3, 0.0}, {1.5, 0.0}, {1.8, 0.0}});
    CHECK(std::abs(r.lhs - ComplexScalar(1.0, 0.0)) < 1e-14);
    CHECK(std::abs(r.rhs - ComplexScalar(1.0, 0.0)) < 1e-12);

    r = transform_one_term({{0.5, 0.0}, {0.5, 0.0}, {1.0, 0.0}, {1.5, 0.0}, {2.5, 0.0}});
    CHECK(r.residual <= 1e-10);
}

TEST_CASE("proof_replay") {
    // x=0: the 3F2 is 1
    ProofReplayTrace t = proof_replay(in(0.5, 0.0, 0), {1e-3});
    CHECK(t.residuals[0] <= 1e-2);
    CHECK(std::abs(t.closed_form - ComplexScalar(1.0, 0.0)) < 1e-12);

    t = proof_replay(in(0.5, 0.3, 2), {1e-2, 1e-3, 1e-4});
    CHECK(t.fitted_order >= 0.8);
    CHECK(t.fitted_order <= 1.2);
    CHECK(t.residuals[0] > t.residuals[1]);
    CHECK(t.residuals[1] > t.residuals[2]);
    // the k >= N+1 tail carries an overall eps factor
    CHECK(t.tail_magnitudes[1] <= 10.0 * 1e-3);

    t = proof_replay(in(1.2, -0.5, 1), {1e-4});
    CHECK(t.residuals[0] <= 1e-3);

    CHECK_THROWS_AS(proof_replay(in(0.5, 1.2, 2), {1e-3}), InvalidInput);
}

TEST_CASE("entry_factor_check") {
    FactorCheck f = entry_factor_check({0.25, 0.0});
    CHECK(std::abs(f.ratio - ComplexScalar(0.25, 0.0)) < 1e-11);
    CHECK(f.faktor_residual <= 1e-11);

    f = entry_factor_check({-0.5, 0.0});
    CHECK(std::abs(f.ratio - ComplexScalar(-0.5, 0.0)) < 1e-11);

    // x -> 0+: factor2 ~ 1/x, corrected -> 1, ratio -> x
    f = entry_factor_check({1e-4, 0.0});
    CHECK(std::abs(f.factor2.real() * 1e-4 - 1.0) < 1e-3);
    CHECK(std::abs(f.corrected - ComplexScalar(1.0, 0.0)) < 1e-3);
    CHECK(std::abs(f.ratio.real() - 1e-4) < 1e-8);

    CHECK_THROWS_AS(entry_factor_check({0.0, 0.0}), PoleError);
    CHECK_THROWS_AS(entry_factor_check({-1.0, 0.0}), PoleError);
}

TEST_CASE("digamma_chain_check") {
    ChainCheck c = digamma_chain_check({0.0, 0.0});
    CHECK(std::abs(c.expr6 - ComplexScalar(1.0, 0.0)) < 1e-13);
    CHECK(std::abs(c.expr15 - ComplexScalar(1.0, 0.0)) < 1e-13);

    c = digamma_chain_check({0.25, 0.0});
    CHECK(c.residual <= 1e-12);

    // stable limit through x = 1/2: both sides -> ln 2
    for (double x : {0.5, 0.5 + 1e-4, 0.5 - 1e-4, 0.497, 0.503}) {
        c = digamma_chain_check({x, 0.0});
        CHECK(c.residual <= 1e-11);
        CHECK(std::abs(c.expr6.real() - constants::ln2) < 1e-2);
    }
    CHECK(std::abs(digamma_chain_check({0.5, 0.0}).expr6.real() - constants::ln2) < 1e-12);
}

TEST_CASE("analytic continuation beyond Re x < 1") {
    for (unsigned N : {1u, 2u, 4u}) {
        for (double x : {1.05, 1.45, double(N) + 0.85}) {
            if (x >= N + 2.0) continue;
            const TheoremInput p = in(0.7, x, N);
            if (is_removable_x(p, 1e-3)) continue;
            const ComplexScalar closed = theorem_3f2(p);
            const ComplexScalar series =
                evaluate(SeriesSpec({p.a, p.a, p.x}, {p.a + 1.0, p.a + 1.0 + double(N)}),
                         1e-13, 400000)
                    .value;
            CHECK(rel(closed, series) < 1e-8);
        }
    }
}
