#include <benchmark/benchmark.h>

#include "wrightkit/audit.hpp"
#include "wrightkit/gamma.hpp"
#include "wrightkit/integral.hpp"
#include "wrightkit/series.hpp"

namespace {

using namespace wrightkit;

void BM_Gamma(benchmark::State& state) {
    double x = 0.13;
    for (auto _ : state) {
        x += 1e-9;
        benchmark::DoNotOptimize(gamma(x + 7.0));
    }
}
BENCHMARK(BM_Gamma);

void BM_LogGamma(benchmark::State& state) {
    double x = 0.13;
    for (auto _ : state) {
        x += 1e-9;
        benchmark::DoNotOptimize(log_gamma(x + 120.0));
    }
}
BENCHMARK(BM_LogGamma);

void BM_WrightSeries(benchmark::State& state) {
    const double z = static_cast<double>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(wright({0.5, 1.5}, z));
    }
}
BENCHMARK(BM_WrightSeries)->Arg(1)->Arg(5)->Arg(25);

void BM_WrightNegSeries(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(wright({1.5, 2.0}, -0.5));
    }
}
BENCHMARK(BM_WrightNegSeries);

void BM_GenWrightSeries(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(gen_wright({1.0, 2.0, 0.5, 1.5}, 1.5));
    }
}
BENCHMARK(BM_GenWrightSeries);

void BM_FoxWright11(benchmark::State& state) {
    FoxWrightSpec s{{{1.0, 1.0}}, {{2.0, 1.0}}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(fox_wright(s, 2.0));
    }
}
BENCHMARK(BM_FoxWright11);

void BM_JacobiRuleBuild(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    double a = -0.5;
    for (auto _ : state) {
        // Vary the exponent so the memoized cache never hits.
        a += 1e-7;
        benchmark::DoNotOptimize(quadrature::gauss_jacobi_01(n, a, 0.5));
    }
}
BENCHMARK(BM_JacobiRuleBuild)->Arg(32)->Arg(128)->Arg(512);

void BM_WrightViaLemma1(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(wright_via_lemma1({1.5, 2.5}, 1.0));
    }
}
BENCHMARK(BM_WrightViaLemma1);

void BM_AuditPoint(benchmark::State& state) {
    AuditPoint p;
    p.alpha = 1.0;
    p.beta = 2.0;
    p.gamma = 0.5;
    p.sigma = 1.5;
    p.z = 0.5;
    for (auto _ : state) {
        benchmark::DoNotOptimize(evaluate_inequality(InequalityId::TURAN_GAMMA, p));
    }
}
BENCHMARK(BM_AuditPoint);

}  // namespace

BENCHMARK_MAIN();
