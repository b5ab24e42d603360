#include <benchmark/benchmark.h>

#include <cayley/diophantine.hpp>
#include <cayley/geometry.hpp>
#include <cayley/primes.hpp>
#include <cayley/series.hpp>
#include <cayley/torsor.hpp>

namespace {

void bm_cubic_form_small(benchmark::State& state) {
    cayley::geometry::Vec4 x{-210, -70, -21, 15};
    for (auto _ : state) {
        benchmark::DoNotOptimize(cayley::geometry::cubic_form(x));
    }
}
BENCHMARK(bm_cubic_form_small);

void bm_cubic_form_large(benchmark::State& state) {
    cayley::geometry::Vec4 x{-4611686018427387847LL, 2305843009213693907LL,
                             -1152921504606846869LL, 576460752303423433LL};
    for (auto _ : state) {
        benchmark::DoNotOptimize(cayley::geometry::cubic_form(x));
    }
}
BENCHMARK(bm_cubic_form_large);

void bm_count_direct(benchmark::State& state) {
    const std::int64_t B = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cayley::geometry::count_N_direct(B));
    }
}
BENCHMARK(bm_count_direct)->Arg(25)->Arg(50);

void bm_count_torsor(benchmark::State& state) {
    const std::int64_t B = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cayley::torsor::count_N_torsor(B));
    }
}
BENCHMARK(bm_count_torsor)->Arg(50)->Arg(200);

void bm_descend(benchmark::State& state) {
    cayley::geometry::SurfacePoint pt({-1045, -627, -285, 165});
    for (auto _ : state) {
        benchmark::DoNotOptimize(cayley::torsor::descend(pt));
    }
}
BENCHMARK(bm_descend);

void bm_primes_window(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(cayley::primes::primes_in(1e9 - 1e5, 1e9));
    }
}
BENCHMARK(bm_primes_window);

void bm_solve_equation(benchmark::State& state) {
    const auto beta = cayley::diophantine::SignVector::validated({1, 1, 1, -1});
    const std::array<double, 4> eta{1.0, 1.0, 1.0, 3.0};
    const auto spec = cayley::diophantine::IntervalSpec::from_eta(eta, 1e9);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cayley::diophantine::solve_prime_equation(beta, spec));
    }
}
BENCHMARK(bm_solve_equation);

void bm_count_J(benchmark::State& state) {
    const auto beta = cayley::diophantine::SignVector::validated({1, 1, 1, -1});
    const std::array<double, 4> eta{1.0, 1.0, 1.0, 3.0};
    const auto spec = cayley::diophantine::IntervalSpec::from_eta(eta, 1e12);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cayley::diophantine::count_J(beta, spec));
    }
}
BENCHMARK(bm_count_J);

void bm_series_product(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(cayley::series::singular_series_product(100000));
    }
}
BENCHMARK(bm_series_product);

}  // namespace

BENCHMARK_MAIN();
