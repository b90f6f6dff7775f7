// Desk-scale benchmarks of the hot paths: expansion, the two filtration
// oracles, the coproduct, and the harmonic coproduct. Inputs are seeded so
// runs are comparable.

#include <benchmark/benchmark.h>

#include <muharm/cyclotomic.hpp>
#include <muharm/mu_bridge.hpp>
#include <muharm/sampler.hpp>
#include <muharm/verify.hpp>

using namespace muharm;

namespace {

GroupAlgebraElement stratum_input(int n, int m) {
    SeededRng rng(12345);
    SampleBudget b;
    return sample_FmW(n, m, rng, b);
}

void BM_mu_expand(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    GroupAlgebraElement v = stratum_input(n, 3);
    for (auto _ : state) {
        MuExpander ex(n, 6);
        benchmark::DoNotOptimize(ex.expand(v));
    }
}
BENCHMARK(BM_mu_expand)->Arg(1)->Arg(2)->Arg(4);

void BM_filtration_mu(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    GroupAlgebraElement v = stratum_input(n, 3);
    for (auto _ : state) benchmark::DoNotOptimize(filtration_degree(v, n, 6));
}
BENCHMARK(BM_filtration_mu)->Arg(1)->Arg(2)->Arg(4);

void BM_filtration_schreier(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    GroupAlgebraElement v = stratum_input(n, 3);
    for (auto _ : state) benchmark::DoNotOptimize(oracle_filtration_degree(v, n, 6));
}
BENCHMARK(BM_filtration_schreier)->Arg(1)->Arg(2)->Arg(4);

void BM_coproduct(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    GroupAlgebraElement v = stratum_input(2, m);
    for (auto _ : state) benchmark::DoNotOptimize(coproduct(v));
}
BENCHMARK(BM_coproduct)->Arg(1)->Arg(2)->Arg(4);

void BM_harmonic(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    SeededRng rng(777);
    ZWordElement z;
    z.add(random_zword(rng, n, 6), Rational(1));
    for (auto _ : state) benchmark::DoNotOptimize(harmonic_coproduct(z, n));
}
BENCHMARK(BM_harmonic)->Arg(1)->Arg(2)->Arg(4);

void BM_verify_thm1(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(verify_thm1(2, 2, 5, 99));
}
BENCHMARK(BM_verify_thm1);

}  // namespace

BENCHMARK_MAIN();
