#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "wrightkit/errors.hpp"
#include "wrightkit/gamma.hpp"
#include "wrightkit/probes.hpp"
#include "wrightkit/series.hpp"

using namespace wrightkit;

TEST_CASE("complete monotonicity accepts canonical functions") {
    for (double c : {0.5, 1.0, 3.0}) {
        const auto res = check_completely_monotone(
            [c](double x) { return std::exp(-c * x); }, 0.1, 0.9, 6, 0.01, 25);
        CHECK(res.passed);
        CHECK(res.worst_margin >= -res.slack);
        CHECK(res.samples == 25 * 7);
        CHECK(res.slack > 0.0);
    }
    // 1/x is completely monotone on (0, inf).
    CHECK(check_completely_monotone([](double x) { return 1.0 / x; }, 0.5, 2.0).passed);
}

TEST_CASE("complete monotonicity rejects increasing functions at order 1") {
    const auto res =
        check_completely_monotone([](double x) { return x; }, 0.1, 0.9, 2, 0.01, 25);
    CHECK_FALSE(res.passed);
    CHECK(res.worst_point.order == 1);  // smallest failing order
    CHECK(res.worst_margin < -res.slack);
}

TEST_CASE("polynomials with positive leading coefficient fail by order <= 2") {
    const auto res = check_completely_monotone(
        [](double x) { return (x - 1.0) * (x - 1.0) + 0.5; }, 0.1, 3.0, 6, 0.01, 25);
    CHECK_FALSE(res.passed);
    CHECK(res.worst_point.order <= 2);
}

TEST_CASE("complete monotonicity of the negated-argument Wright function") {
    const auto res = check_completely_monotone(
        [](double x) { return wright({1.5, 2.0}, -x).value; }, 0.05, 0.95, 6, 0.01, 25);
    CHECK(res.passed);
    // Same property for the generalized family.
    const auto res2 = check_completely_monotone(
        [](double x) { return gen_wright({1.6, 2.0, 1.0, 2.0}, -x).value; }, 0.05, 0.95,
        6, 0.01, 25);
    CHECK(res2.passed);
}

TEST_CASE("differentiation-formula spot check of low-order differences") {
    // Delta^1 of W(-x) ~ -h W_{alpha,beta+alpha}(-x): signs must agree with
    // the closed-form derivative route for n <= 2.
    const double h = 0.01;
    const double x = 0.4;
    const double d1 = wright({1.5, 2.0}, -(x + h)).value - wright({1.5, 2.0}, -x).value;
    CHECK(d1 < 0.0);
    CHECK(std::fabs(d1 + h * wright({1.5, 3.5}, -x).value) < 1e-3 * h);
    const double d2 = wright({1.5, 2.0}, -(x + 2 * h)).value -
                      2.0 * wright({1.5, 2.0}, -(x + h)).value +
                      wright({1.5, 2.0}, -x).value;
    CHECK(d2 > 0.0);
    CHECK(std::fabs(d2 - h * h * wright({1.5, 5.0}, -x).value) < 1e-3 * h * h);
}

TEST_CASE("log-convexity midpoint test on knowns") {
    CHECK(check_log_convex_arg([](double x) { return std::exp(x * x); }, 0.1, 0.9, 25)
              .passed);
    const auto concave =
        check_log_convex_arg([](double x) { return std::exp(-x * x); }, 0.1, 0.9, 25);
    CHECK_FALSE(concave.passed);
    CHECK(concave.worst_margin < -concave.slack);
    // Constant function: exactly zero margin, passes.
    const auto flat = check_log_convex_arg([](double) { return 1.0; }, 0.1, 0.9, 25);
    CHECK(flat.passed);
    CHECK(flat.worst_margin == 0.0);
    CHECK(flat.samples == 2 * 25 - 1);
}

TEST_CASE("log-convexity in z of the negated Wright function fails") {
    // (log W(-z))'' = (W_{b+2a}W_b - W_{b+a}^2)/W^2 < 0 near z = 0 by the
    // strict log-convexity of Gamma, so the midpoint test must report a
    // genuine violation, not a roundoff artifact.
    const auto res = check_log_convex_arg(
        [](double x) { return wright({1.6, 2.0}, -x).value; }, 0.05, 0.95, 25);
    CHECK_FALSE(res.passed);
    CHECK(res.worst_margin < -1e-6);
    const auto res2 = check_log_convex_arg(
        [](double x) { return gen_wright({1.6, 2.0, 1.0, 2.0}, -x).value; }, 0.05, 0.95,
        25);
    CHECK_FALSE(res2.passed);
}

TEST_CASE("log-convexity in sigma holds") {
    const auto res = check_log_convex_param(
        [](double s) { return gen_wright({1.0, 2.0, 1.5, s}, 1.0).value; }, 1.0, 5.0, 25);
    CHECK(res.passed);
    const auto res_ml = check_log_convex_param(
        [](double s) { return wrightkit::gamma(s) * ml4(1.0, 2.0, 1.0, s, 1.0).value; }, 1.0, 5.0,
        25);
    CHECK(res_ml.passed);
}

TEST_CASE("probe validation") {
    CHECK_THROWS_AS(check_completely_monotone([](double) { return 1.0; }, 0.9, 0.1),
                    DomainError);
    CHECK_THROWS_AS(check_completely_monotone([](double) { return 1.0; }, -0.5, 0.5),
                    DomainError);
    CHECK_THROWS_AS(
        check_completely_monotone([](double) { return 1.0; }, 0.1, 0.15, 6, 0.01, 25),
        DomainError);  // h * max_order exceeds the interval
    CHECK_THROWS_AS(check_log_convex_arg([](double x) { return x - 0.5; }, 0.1, 0.9, 10),
                    PositivityError);
    CHECK_THROWS_AS(check_log_convex_arg([](double) { return 1.0; }, 0.5, 0.5, 10),
                    DomainError);
}
