#include <benchmark/benchmark.h>

#include "rootcensus/census.hpp"
#include "rootcensus/elliptic.hpp"
#include "rootcensus/orders.hpp"
#include "rootcensus/smooth.hpp"

using namespace rc;

// Arg 0 runs the serial reference; any other value is the OpenMP thread count.

static void BM_census_fixed_root(benchmark::State& st) {
    const int t = static_cast<int>(st.range(0));
    for (auto _ : st)
        benchmark::DoNotOptimize(t ? census_fixed_root(2, 10'000'000, 1, 0, t) : census_fixed_root_serial(2, 10'000'000));
}
BENCHMARK(BM_census_fixed_root)->Arg(0)->Arg(1)->Arg(4)->Arg(8)->UseRealTime()->Unit(benchmark::kMillisecond);

static void BM_poly_census(benchmark::State& st) {
    const int t = static_cast<int>(st.range(0));
    const Poly f({2, 0, 0, 1});
    PolyCensusOptions opt;
    opt.threads = t;
    for (auto _ : st)
        benchmark::DoNotOptimize(t ? poly_census(f, 2, 1'000'000'000'000'000ULL, opt)
                                   : poly_census_serial(f, 2, 1'000'000'000'000'000ULL, opt));
}
BENCHMARK(BM_poly_census)->Arg(0)->Arg(1)->Arg(4)->Arg(8)->UseRealTime()->Unit(benchmark::kMillisecond);

static void BM_prime_order_census(benchmark::State& st) {
    const int t = static_cast<int>(st.range(0));
    for (auto _ : st)
        benchmark::DoNotOptimize(t ? prime_order_census(0, 2, 200'000, 1, false, t)
                                   : prime_order_census_serial(0, 2, 200'000, 1, false));
}
BENCHMARK(BM_prime_order_census)->Arg(0)->Arg(1)->Arg(4)->Arg(8)->UseRealTime()->Unit(benchmark::kMillisecond);

static void BM_relative_order_series(benchmark::State& st) {
    const int t = static_cast<int>(st.range(0));
    for (auto _ : st)
        benchmark::DoNotOptimize(t ? relative_order_series(2, 5'000'000, t) : relative_order_series_serial(2, 5'000'000));
}
BENCHMARK(BM_relative_order_series)->Arg(0)->Arg(1)->Arg(4)->Arg(8)->UseRealTime()->Unit(benchmark::kMillisecond);

static void BM_psi_count(benchmark::State& st) {
    const int t = static_cast<int>(st.range(0));
    for (auto _ : st)
        benchmark::DoNotOptimize(t ? psi_count(100'000'000, 10'000, t) : psi_count_serial(100'000'000, 10'000));
}
BENCHMARK(BM_psi_count)->Arg(0)->Arg(1)->Arg(4)->Arg(8)->UseRealTime()->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
