#include <benchmark/benchmark.h>

#include "eulerlp/character.hpp"
#include "eulerlp/euler.hpp"
#include "eulerlp/harness.hpp"
#include "eulerlp/lfunction.hpp"

using namespace eulerlp;

static void BM_EulerNumbers(benchmark::State& state) {
    const auto nmax = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(euler_numbers_upto(nmax));
}
BENCHMARK(BM_EulerNumbers)->Arg(30)->Arg(100);

static void BM_EulerPolynomialEval(benchmark::State& state) {
    const Rational x(7, 13);
    for (auto _ : state) benchmark::DoNotOptimize(eval_euler_poly(static_cast<std::size_t>(state.range(0)), x));
}
BENCHMARK(BM_EulerPolynomialEval)->Arg(12)->Arg(40);

static void BM_Teichmuller(benchmark::State& state) {
    const PadicContext ctx(7, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(teichmuller(3, ctx));
}
BENCHMARK(BM_Teichmuller)->Arg(6)->Arg(40);

static void BM_PadicL(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const PadicContext ctx(7, m);
    const auto chi = DirichletCharacter::teichmuller_power(3, ctx);
    const auto plan = TruncationPlan::for_precision(m);
    for (auto _ : state) benchmark::DoNotOptimize(padic_l(5, chi, plan));
}
BENCHMARK(BM_PadicL)->Arg(6)->Arg(20);

static void BM_Theorem6(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(verify_theorem6(7, 6, 4, m));
}
BENCHMARK(BM_Theorem6)->Arg(6)->Arg(12);

static void BM_Grid(benchmark::State& state) {
    GridConfig config;
    config.primes = {3, 5, 7};
    config.r_values = {1, 2, 3, 4};
    config.n_values = {2, 4, 6};
    config.threads = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(run_grid(config));
}
BENCHMARK(BM_Grid)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
