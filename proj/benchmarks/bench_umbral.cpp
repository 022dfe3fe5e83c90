#include <benchmark/benchmark.h>

#include "umbral/dsl.hpp"
#include "umbral/evaluate.hpp"
#include "umbral/registry.hpp"
#include "umbral/series.hpp"
#include "umbral/sheffer.hpp"
#include "umbral/special.hpp"

using namespace umbral;

static void BM_Revert(benchmark::State& state) {
    const auto N = static_cast<unsigned>(state.range(0));
    std::vector<Poly> c(N + 1);
    for (unsigned n = 1; n <= N; ++n) c[n] = Poly(Rational(n % 2 ? 1 : -1, n));
    const TruncatedEGF h(c);
    for (auto _ : state) benchmark::DoNotOptimize(egf_revert(h));
}
BENCHMARK(BM_Revert)->Arg(8)->Arg(12)->Arg(24);

static void BM_DotFactorialMoments(benchmark::State& state) {
    const auto N = static_cast<unsigned>(state.range(0));
    const auto g = builtin_umbra("bell", N), a = builtin_umbra("bern", N);
    for (auto _ : state) benchmark::DoNotOptimize(dot(g, a));
}
BENCHMARK(BM_DotFactorialMoments)->Arg(8)->Arg(12);

static void BM_DotViaEgf(benchmark::State& state) {
    const auto N = static_cast<unsigned>(state.range(0));
    const auto g = builtin_umbra("bell", N), a = builtin_umbra("bern", N);
    for (auto _ : state) benchmark::DoNotOptimize(dot_via_egf(g, a));
}
BENCHMARK(BM_DotViaEgf)->Arg(8)->Arg(12);

static void BM_Evaluate(benchmark::State& state) {
    const Registry reg;
    const auto e = parse("x . adj(u) + cinv(bell) ^. 2 - bern'");
    for (auto _ : state) benchmark::DoNotOptimize(evaluate(e, static_cast<unsigned>(state.range(0)), reg));
}
BENCHMARK(BM_Evaluate)->Arg(6)->Arg(10);

static void BM_ShefferBothRoutes(benchmark::State& state) {
    const auto pair = poisson_charlier_pair(Rational(2), static_cast<unsigned>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(sheffer_moments(pair));
        benchmark::DoNotOptimize(sheffer_moments_umbral(pair));
    }
}
BENCHMARK(BM_ShefferBothRoutes)->Arg(6)->Arg(10);

static void BM_ConnectionConstants(benchmark::State& state) {
    const auto N = static_cast<unsigned>(state.range(0));
    const auto from = bernoulli_pair(N), to = exponential_pair(N);
    for (auto _ : state) benchmark::DoNotOptimize(connection_constants_report(from, to));
}
BENCHMARK(BM_ConnectionConstants)->Arg(8);

static void BM_Parse(benchmark::State& state) {
    const std::string text = "mul(u, chi) . (2 . bell ^. 3 - adj(cinv(bern'))) + scale(-3/4, x . u'') + dsum(fresh(ubar), u)";
    for (auto _ : state) benchmark::DoNotOptimize(parse(text));
}
BENCHMARK(BM_Parse);

BENCHMARK_MAIN();
