#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "support/oracles.hpp"
#include "wrightkit/errors.hpp"
#include "wrightkit/gamma.hpp"
#include "wrightkit/series.hpp"

using namespace wrightkit;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {
// Frozen from the double-double summation oracle (sum 1/(k!)^2 and
// sum 1/(k!(k+1)!) until the term drops below 1e-30).
constexpr double kW11at1 = 2.2795853023360673;
constexpr double kW12at1 = 1.5906368546373291;
}  // namespace

TEST_CASE("wright known values against the double-double oracle") {
    const Evaluation a = wright({1.0, 1.0}, 1.0);
    const Evaluation b = wright({1.0, 2.0}, 1.0);
    CHECK_THAT(a.value, WithinRel(kW11at1, 1e-12));
    CHECK_THAT(b.value, WithinRel(kW12at1, 1e-12));
    CHECK_THAT(a.value, WithinRel(ddtest::to_double(oracles::dd_wright(1, 1, 1)), 1e-12));
    CHECK_THAT(b.value, WithinRel(ddtest::to_double(oracles::dd_wright(1, 2, 1)), 1e-12));
}

TEST_CASE("wright at z = 0 is the reciprocal Gamma") {
    CHECK(wright({1.0, 2.0}, 0.0).value == 1.0);
    CHECK_THAT(wright({0.5, 3.5}, 0.0).value, WithinRel(1.0 / wrightkit::gamma(3.5), 1e-14));
    const Evaluation ev = wright({2.0, 1.0}, 0.0);
    CHECK(ev.terms_used >= 1);
    CHECK(ev.method == EvalMethod::series);
}

TEST_CASE("wright evaluation bookkeeping") {
    const Evaluation ev = wright({0.5, 1.0}, 3.0);
    CHECK(ev.terms_used >= 11);
    CHECK(ev.terms_used <= 10'000);
    CHECK(std::isfinite(ev.abs_error_estimate));
    CHECK(ev.abs_error_estimate >= 0.0);
    // Error-estimate contract on the moderate-argument region.
    for (double alpha : {0.5, 1.0, 2.0}) {
        for (double beta : {1.0, 2.0}) {
            for (double z : {-0.9, 0.5, 3.0, 50.0}) {
                const Evaluation e = wright({alpha, beta}, z);
                CHECK(e.abs_error_estimate <= 1e-12 * std::max(1.0, std::fabs(e.value)));
            }
        }
    }
}

TEST_CASE("stopping rule is sound against the double-double oracle") {
    for (double alpha : {0.5, 1.0, 1.5, 2.0}) {
        for (double beta : {0.5, 1.0, 2.0, 3.5}) {
            for (double z : {-5.0, -0.9, 0.5, 3.0, 10.0}) {
                const Evaluation ev = wright({alpha, beta}, z);
                const double ref = ddtest::to_double(oracles::dd_wright(alpha, beta, z));
                CHECK(std::fabs(ev.value - ref) <= 10.0 * ev.abs_error_estimate);
            }
        }
    }
}

TEST_CASE("wright_neg equals wright at negated argument") {
    for (double z : {0.0, 0.25, 0.9, 1.5}) {
        CHECK(wright_neg({1.5, 2.0}, z).value == wright({1.5, 2.0}, -z).value);
    }
    CHECK_THROWS_AS(wright_neg({1.5, 2.0}, -0.5), DomainError);
    // Nonnegativity on the monotonicity domain.
    CHECK(wright_neg({1.5, 2.0}, 0.5).value >= 0.0);
    CHECK(wright_neg({2.0, 2.5}, 0.9).value >= 0.0);
    // Continuity at 0+: W_{2,2}(-z) -> 1/Gamma(2) = 1.
    CHECK_THAT(wright_neg({2.0, 2.0}, 1e-12).value, WithinAbs(1.0, 1e-11));
}

TEST_CASE("wright_neg cross-check by alternating partial-sum bracketing") {
    // For (1, 1.5) the term magnitudes decrease from k = 2 on z in (0,1), so
    // consecutive partial sums bracket the limit.
    const double alpha = 1.0, beta = 1.5, z = 0.9;
    const double value = wright_neg({alpha, beta}, z).value;
    std::vector<double> partial;
    double sum = 0.0;
    for (int k = 0; k < 40; ++k) {
        sum += std::pow(-z, k) / (std::tgamma(k + 1.0) * std::tgamma(alpha * k + beta));
        partial.push_back(sum);
    }
    for (int k = 4; k + 1 < 40; ++k) {
        const double lo = std::min(partial[k], partial[k + 1]);
        const double hi = std::max(partial[k], partial[k + 1]);
        CHECK(value >= lo - 1e-13);
        CHECK(value <= hi + 1e-13);
    }
}

TEST_CASE("wright_derivative is the parameter-shifted series") {
    for (double z : {-0.9, 0.0, 1.0, 2.5}) {
        CHECK(wright_derivative({1.0, 1.0}, z).value == wright({1.0, 2.0}, z).value);
    }
    // Central finite difference oracle, h = 1e-5.
    const double h = 1e-5;
    for (auto [alpha, beta, z] : {std::array{1.0, 2.0, 1.0}, {0.5, 1.0, 2.0}}) {
        const double fd =
            (wright({alpha, beta}, z + h).value - wright({alpha, beta}, z - h).value) /
            (2.0 * h);
        CHECK_THAT(wright_derivative({alpha, beta}, z).value, WithinAbs(fd, 1e-6));
    }
}

TEST_CASE("derivative identity over the parameter grid") {
    const double h = 1e-5;
    for (double alpha : {0.5, 1.0, 2.0}) {
        for (double beta : {1.0, 2.0, 3.0}) {
            for (double z : {-0.9, -0.3, 0.0, 1.0, 3.0}) {
                const double fd =
                    (wright({alpha, beta}, z + h).value - wright({alpha, beta}, z - h).value) /
                    (2.0 * h);
                CHECK_THAT(wright_derivative({alpha, beta}, z).value, WithinAbs(fd, 1e-6));
            }
        }
    }
}

TEST_CASE("generalized derivative identity") {
    const double h = 1e-5;
    for (auto [g, s] : {std::pair{0.5, 1.5}, {1.0, 2.0}, {2.0, 2.5}}) {
        for (double z : {-0.5, 0.5, 2.0}) {
            const GenWrightParams p{1.0, 2.0, g, s};
            const double fd = (gen_wright(p, z + h).value - gen_wright(p, z - h).value) /
                              (2.0 * h);
            const double rhs =
                (g / s) * gen_wright({1.0, 2.0 + 1.0, g + 1.0, s + 1.0}, z).value;
            CHECK_THAT(fd, WithinAbs(rhs, 1e-6));
        }
    }
}

TEST_CASE("gen_wright collapse and known values") {
    // gamma == sigma collapses to the plain Wright series exactly.
    for (double z : {-0.9, 0.0, 0.7, 2.0}) {
        CHECK_THAT(gen_wright({1.0, 2.0, 3.0, 3.0}, z).value,
                   WithinRel(wright({1.0, 2.0}, z).value, 1e-15));
    }
    CHECK_THAT(gen_wright({0.5, 1.5, 0.7, 2.2}, 0.0).value,
               WithinRel(1.0 / wrightkit::gamma(1.5), 1e-14));
    // W^{1,2}_{1,2}(1) = W_{1,1}(1) - 1 via the exact difference identity.
    CHECK_THAT(gen_wright({1.0, 2.0, 1.0, 2.0}, 1.0).value,
               WithinRel(kW11at1 - 1.0, 1e-12));
    const double dd_ref =
        ddtest::to_double(oracles::dd_gen_wright(1.0, 2.0, 0.7, 2.3, 1.5));
    CHECK_THAT(gen_wright({1.0, 2.0, 0.7, 2.3}, 1.5).value, WithinRel(dd_ref, 1e-12));
}

TEST_CASE("gen_wright pochhammer edge cases") {
    // sigma hitting a non-positive integer factor is a pole of (sigma)_n.
    CHECK_THROWS_AS(gen_wright({1.0, 2.0, 1.0, -2.0}, 1.0), PoleError);
    // gamma hitting zero truncates the series: W^{-2,sigma} is a polynomial.
    const double val = gen_wright({1.0, 2.0, -2.0, 1.5}, 1.0).value;
    double ref = 0.0;
    for (int n = 0; n <= 2; ++n) {
        ref += pochhammer(-2.0, n) / pochhammer(1.5, n) / std::tgamma(n + 2.0) /
               std::tgamma(n + 1.0);
    }
    CHECK_THAT(val, WithinRel(ref, 1e-13));
}

TEST_CASE("fox_wright exponential collapse and moments") {
    FoxWrightSpec expo{{{1.0, 1.0}}, {{1.0, 1.0}}};
    for (double z : {-1.0, 0.0, 1.0, 3.0}) {
        CHECK_THAT(fox_wright(expo, z).value, WithinRel(std::exp(z), 1e-12));
    }
    FoxWrightSpec gs{{{0.8, 1.0}}, {{2.3, 1.0}}};
    CHECK_THAT(fox_wright(gs, 0.0).value, WithinRel(wrightkit::gamma(0.8) / wrightkit::gamma(2.3), 1e-13));
    // 1Psi1[(alpha,alpha);(beta,alpha)] at alpha=1, beta=2 has the closed form
    // (e^z - 1)/z, an independent direct-summation identity.
    FoxWrightSpec psi{{{1.0, 1.0}}, {{2.0, 1.0}}};
    for (double z : {0.5, 2.0, -0.7}) {
        CHECK_THAT(fox_wright(psi, z).value, WithinRel(std::expm1(z) / z, 1e-12));
    }
}

TEST_CASE("fox_wright convergence condition") {
    FoxWrightSpec bad{{{1.0, 2.0}}, {}};
    CHECK_THROWS_AS(fox_wright(bad, 0.5), ConvergenceDomainError);
    FoxWrightSpec boundary{{{1.0, 1.0}}, {}};
    CHECK_THROWS_AS(fox_wright(boundary, 0.5), ConvergenceDomainError);
    FoxWrightSpec ok{{}, {{1.0, 0.5}}};
    CHECK_NOTHROW(fox_wright(ok, 0.5));
}

TEST_CASE("mittag_leffler instances") {
    MittagLefflerSpec one{{{1.0, 1.0}}};
    CHECK_THAT(mittag_leffler(one, 1.0).value, WithinRel(std::exp(1.0), 1e-13));
    MittagLefflerSpec two{{{1.0, 1.0}, {1.0, 1.0}}};
    CHECK_THAT(mittag_leffler(two, 1.0).value, WithinRel(kW11at1, 1e-12));
    MittagLefflerSpec zero_at{{{2.5, 0.5}}};
    CHECK_THAT(mittag_leffler(zero_at, 0.0).value, WithinRel(1.0 / wrightkit::gamma(2.5), 1e-13));
    MittagLefflerSpec degenerate{{{1.0, 0.0}, {2.0, 0.0}}};
    CHECK_THROWS_AS(mittag_leffler(degenerate, 1.0), DomainError);
    CHECK_THROWS_AS(mittag_leffler(MittagLefflerSpec{}, 1.0), DomainError);
}

TEST_CASE("ml4 identities") {
    CHECK_THAT(ml4(1, 1, 1, 1, 1.0).value, WithinRel(kW11at1, 1e-12));
    // Second pair (1,1) contributes Gamma(k+1) = k!, reducing to the Wright series.
    for (auto [alpha, beta] : {std::pair{0.5, 1.5}, {1.0, 2.0}, {2.0, 0.5}}) {
        for (double z : {-0.9, 0.8, 3.0}) {
            CHECK_THAT(ml4(alpha, beta, 1.0, 1.0, z).value,
                       WithinRel(wright({alpha, beta}, z).value, 1e-12));
        }
    }
    // W^{1,sigma} = Gamma(sigma) E_{alpha,beta;1,sigma}.
    for (double sigma : {1.5, 2.0, 4.0}) {
        for (double z : {-0.5, 0.5, 2.0}) {
            CHECK_THAT(wrightkit::gamma(sigma) * ml4(1.0, 2.0, 1.0, sigma, z).value,
                       WithinRel(gen_wright({1.0, 2.0, 1.0, sigma}, z).value, 1e-12));
        }
    }
    CHECK_THAT(ml4(0.5, 1.5, 1.0, 2.5, 2.0).value,
               WithinRel(ddtest::to_double(oracles::dd_ml4(0.5, 1.5, 1.0, 2.5, 2.0)), 1e-12));
}

TEST_CASE("mittag_leffler equals the fox_wright instance") {
    for (double z : {-2.0, 0.3, 4.0}) {
        MittagLefflerSpec s{{{1.5, 0.5}, {1.0, 2.0}}};
        FoxWrightSpec fw{{{1.0, 1.0}}, {{1.5, 0.5}, {1.0, 2.0}}};
        CHECK_THAT(mittag_leffler(s, z).value, WithinRel(fox_wright(fw, z).value, 1e-12));
    }
}

TEST_CASE("pole handling") {
    // Ascending denominator argument through a pole is a degenerate beta.
    CHECK_THROWS_AS(wright({1.0, -1.0}, 0.0), PoleError);
    CHECK_THROWS_AS(wright({1.0, 0.0}, 1.0), PoleError);
    CHECK_THROWS_AS(wright({0.5, -1.0}, 2.0), PoleError);
    // Descending argument (alpha < 0) zeroes the term: 1/Gamma(pole) = 0.
    const double alpha = -0.5, beta = 0.5, z = 1.0;
    const Evaluation ev = wright({alpha, beta}, z);
    double ref = 0.0;
    for (int k = 0; k < 30; ++k) {
        const double arg = alpha * k + beta;
        if (arg <= 0.0 && arg == std::floor(arg)) continue;
        ref += std::pow(z, k) / (std::tgamma(k + 1.0) * std::tgamma(arg));
    }
    CHECK_THAT(ev.value, WithinRel(ref, 1e-12));
}

TEST_CASE("term budget produces NonConvergenceError") {
    SeriesOptions tiny;
    tiny.term_budget = 5;
    CHECK_THROWS_AS(wright({1.0, 1.0}, 1.0, tiny), NonConvergenceError);
    SeriesOptions enough;
    enough.term_budget = 10'000;
    CHECK_NOTHROW(wright({1.0, 1.0}, 1.0, enough));
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(wright({-1.0, 1.0}, 0.5), DomainError);
    CHECK_THROWS_AS(wright({-1.5, 1.0}, 0.5), DomainError);
    CHECK_THROWS_AS(gen_wright({-2.0, 1.0, 1.0, 2.0}, 0.5), DomainError);
    CHECK(WrightParams{1.5, 2.0}.monotonicity_hypothesis());
    CHECK_FALSE(WrightParams{1.0, 2.0}.monotonicity_hypothesis());
    CHECK(WrightParams{0.5, 1.0}.integral_hypothesis());
    CHECK_FALSE(WrightParams{1.0, 0.5}.integral_hypothesis());
    CHECK(GenWrightParams{1.0, 1.0, 0.5, 1.5}.integral_hypothesis());
    CHECK_FALSE(GenWrightParams{1.0, 1.0, 1.5, 1.5}.integral_hypothesis());
}
