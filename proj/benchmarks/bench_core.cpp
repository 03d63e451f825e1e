#include <benchmark/benchmark.h>

#include "cobcalc/bundles.hpp"
#include "cobcalc/cobordism.hpp"
#include "cobcalc/genus.hpp"
#include "cobcalc/sympoly.hpp"
#include "cobcalc/verifier.hpp"

using namespace cobcalc;

static void BM_ProductCpCp(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const CobordismClass a = cp_class(n);
    e_to_m_matrix(2 * n);  // warm the transition cache
    m_to_e_matrix(n);
    for (auto _ : state) benchmark::DoNotOptimize(product(a, a));
}
BENCHMARK(BM_ProductCpCp)->DenseRange(1, 5);

static void BM_Projectivization(benchmark::State& state) {
    const int rank = static_cast<int>(state.range(0));
    const SurfaceModel s{Rational(152), Rational(100), ""};
    const BundleModel e{rank, Rational(248)};
    for (auto _ : state) benchmark::DoNotOptimize(projectivization_chern(s, e));
}
BENCHMARK(BM_Projectivization)->Arg(2)->Arg(5)->Arg(8)->Arg(11);

static void BM_ChiYFunctional(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const GenusSpec spec = chi_y_spec(n);
    m_to_e_matrix(n);
    for (auto _ : state) benchmark::DoNotOptimize(genus_functional(spec, n));
}
BENCHMARK(BM_ChiYFunctional)->Arg(2)->Arg(6)->Arg(10);

static void BM_SNumber(benchmark::State& state) {
    const int rank = static_cast<int>(state.range(0));
    const CobordismClass p = projectivization_chern(
        SurfaceModel{Rational(7), Rational(-3), ""}, BundleModel{rank, Rational(5)});
    for (auto _ : state) benchmark::DoNotOptimize(s_number(p));
}
BENCHMARK(BM_SNumber)->Arg(5)->Arg(11);

static void BM_VerifyTheorem(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const GeneratorSequence beta =
        beta_sequence(SurfaceModel{Rational(152), Rational(100), ""}, Rational(248), n);
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_theorem(IdealKind::oriented_diffeo, n, beta));
}
BENCHMARK(BM_VerifyTheorem)->Arg(4)->Arg(6)->Arg(8);

static void BM_PowerSumInE(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(power_sum_in_e(k));
}
BENCHMARK(BM_PowerSumInE)->Arg(8)->Arg(12)->Arg(20);

static void BM_EnumeratePartitions(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_partitions(n));
}
BENCHMARK(BM_EnumeratePartitions)->Arg(12)->Arg(30);

static void BM_FourSquares(benchmark::State& state) {
    const long long m = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(four_squares(m));
}
BENCHMARK(BM_FourSquares)->Arg(248)->Arg(9999);

BENCHMARK_MAIN();
