// Microbenchmarks: OpenMP field kernels against the serial reference, plus
// the pointwise return map applied over a production-sized layered field.
#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "plastiplate/kinematics.hpp"
#include "plastiplate/material.hpp"
#include "plastiplate/stencils.hpp"

using namespace plp;

namespace {

PlateGrid big_grid(int n = 257, int layers = 4) {
    PlateGrid g;
    g.nx = g.ny = n;
    g.layers = gauss_legendre_layers(layers);
    return g;
}

ScalarField random_scalar(const PlateGrid& g, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    ScalarField f(g);
    for (auto& v : f.v) v = d(rng);
    return f;
}

LayeredField random_layered(const PlateGrid& g, unsigned seed, double scale) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> d(-scale, scale);
    LayeredField f(g);
    for (auto& s : f.v) s = Sym2{d(rng), d(rng), d(rng)};
    return f;
}

void bench_hessian_parallel(benchmark::State& state) {
    const PlateGrid g = big_grid();
    const ScalarField f = random_scalar(g, 1);
    for (auto _ : state) benchmark::DoNotOptimize(hessian(f, g));
}

void bench_hessian_serial(benchmark::State& state) {
    const PlateGrid g = big_grid();
    const ScalarField f = random_scalar(g, 1);
    for (auto _ : state) benchmark::DoNotOptimize(serial::hessian(f, g));
}

void bench_dx_parallel(benchmark::State& state) {
    const PlateGrid g = big_grid();
    const ScalarField f = random_scalar(g, 2);
    for (auto _ : state) benchmark::DoNotOptimize(dx(f, g));
}

void bench_dx_serial(benchmark::State& state) {
    const PlateGrid g = big_grid();
    const ScalarField f = random_scalar(g, 2);
    for (auto _ : state) benchmark::DoNotOptimize(serial::dx(f, g));
}

void bench_kl_strain_parallel(benchmark::State& state) {
    const PlateGrid g = big_grid();
    KLDisplacement u(g);
    u.u3 = random_scalar(g, 3);
    u.ubar.x = random_scalar(g, 4);
    u.ubar.y = random_scalar(g, 5);
    for (auto _ : state) benchmark::DoNotOptimize(kl_strain(u, g));
}

void bench_kl_strain_serial(benchmark::State& state) {
    const PlateGrid g = big_grid();
    KLDisplacement u(g);
    u.u3 = random_scalar(g, 3);
    u.ubar.x = random_scalar(g, 4);
    u.ubar.y = random_scalar(g, 5);
    for (auto _ : state) benchmark::DoNotOptimize(serial::kl_strain(u, g));
}

// The return-map sweep dominates each Newton iteration; compare an OpenMP
// loop over all (node, layer) points with the same loop run serially.
template <bool Parallel>
void bench_return_map_sweep(benchmark::State& state) {
    const PlateGrid g = big_grid();
    const LayeredField eta = random_layered(g, 6, 2.0);
    const Elasticity e(0.5, 0.0);
    const TruncationParams p(NortonHoffParams(8, 1.0), 5.0);
    LayeredField sigma(g);
    const int n = static_cast<int>(eta.size());
    for (auto _ : state) {
#pragma omp parallel for schedule(static) if (Parallel)
        for (int q = 0; q < n; ++q)
            sigma.v[q] = return_map(eta.v[q], 0.01, e, p, 1e-12).sigma;
        benchmark::DoNotOptimize(sigma.v.data());
    }
}

BENCHMARK(bench_hessian_parallel);
BENCHMARK(bench_hessian_serial);
BENCHMARK(bench_dx_parallel);
BENCHMARK(bench_dx_serial);
BENCHMARK(bench_kl_strain_parallel);
BENCHMARK(bench_kl_strain_serial);
BENCHMARK(bench_return_map_sweep<true>)->Name("bench_return_map_sweep_parallel");
BENCHMARK(bench_return_map_sweep<false>)->Name("bench_return_map_sweep_serial");

}  // namespace

BENCHMARK_MAIN();
