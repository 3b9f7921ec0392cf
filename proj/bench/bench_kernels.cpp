// SPDX-License-Identifier: Apache-2.0
//
// Production (parallel) kernels vs the serial reference implementation.

#include <benchmark/benchmark.h>

#include <cmath>
#include <random>
#include <vector>

#include "zcaq/catalog.hpp"
#include "zcaq/construct.hpp"
#include "zcaq/correlation.hpp"
#include "zcaq/pmepr.hpp"

namespace {

zcaq::Sequence random_sequence(int n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> dist(0.0, 2.0 * 3.14159265358979323846);
    std::vector<zcaq::cplx> v;
    v.reserve(std::size_t(n));
    for (int i = 0; i < n; ++i) v.push_back(std::polar(1.0, dist(rng)));
    return zcaq::Sequence::from_entries(std::move(v));
}

zcaq::Array2D random_array(int n1, int n2, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> dist(0.0, 2.0 * 3.14159265358979323846);
    std::vector<zcaq::cplx> v;
    v.reserve(std::size_t(n1) * std::size_t(n2));
    for (int i = 0; i < n1 * n2; ++i) v.push_back(std::polar(1.0, dist(rng)));
    return zcaq::Array2D::from_entries(n1, n2, std::move(v));
}

zcaq::Quad bench_quad() {
    zcaq::QuadRecipe r;
    r.gcp = *zcaq::find_seed(zcaq::builtin_catalog(), "ex2_gcp32");
    r.zcp = *zcaq::find_seed(zcaq::builtin_catalog(), "ex2_24_16");
    return zcaq::build_quad(r);
}

void BM_xcorr1d_reference(benchmark::State& state) {
    const int n = int(state.range(0));
    const zcaq::Sequence x = random_sequence(n, 1);
    const zcaq::Sequence y = random_sequence(n, 2);
    for (auto _ : state) benchmark::DoNotOptimize(zcaq::ref::xcorr_1d(x, y));
}
BENCHMARK(BM_xcorr1d_reference)->Arg(1024)->Arg(4096);

void BM_xcorr1d_production(benchmark::State& state) {
    const int n = int(state.range(0));
    const zcaq::Sequence x = random_sequence(n, 1);
    const zcaq::Sequence y = random_sequence(n, 2);
    for (auto _ : state) benchmark::DoNotOptimize(zcaq::xcorr_1d(x, y));
}
BENCHMARK(BM_xcorr1d_production)->Arg(1024)->Arg(4096);

void BM_xcorr2d_reference(benchmark::State& state) {
    const int n = int(state.range(0));
    const zcaq::Array2D a = random_array(n, n, 3);
    const zcaq::Array2D b = random_array(n, n, 4);
    for (auto _ : state) benchmark::DoNotOptimize(zcaq::ref::xcorr_2d(a, b));
}
BENCHMARK(BM_xcorr2d_reference)->Arg(32)->Arg(64);

void BM_xcorr2d_production(benchmark::State& state) {
    const int n = int(state.range(0));
    const zcaq::Array2D a = random_array(n, n, 3);
    const zcaq::Array2D b = random_array(n, n, 4);
    for (auto _ : state) benchmark::DoNotOptimize(zcaq::xcorr_2d(a, b));
}
BENCHMARK(BM_xcorr2d_production)->Arg(32)->Arg(64);

void BM_quad_pmepr_serial(benchmark::State& state) {
    const zcaq::Quad quad = bench_quad();
    const int os = int(state.range(0));
    for (auto _ : state) {
        double mx = 0.0;
        for (const zcaq::Array2D& a : quad.arrays)
            for (int j = 0; j < a.n2; ++j)
                mx = std::max(mx, zcaq::measure_pmepr(a.column(j), os));
        benchmark::DoNotOptimize(mx);
    }
}
BENCHMARK(BM_quad_pmepr_serial)->Arg(16)->Arg(64);

void BM_quad_pmepr_parallel(benchmark::State& state) {
    const zcaq::Quad quad = bench_quad();
    const zcaq::SeedPair zcp = *zcaq::find_seed(zcaq::builtin_catalog(), "ex2_24_16");
    const int os = int(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(zcaq::quad_pmepr_report(quad, zcp, os));
}
BENCHMARK(BM_quad_pmepr_parallel)->Arg(16)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
