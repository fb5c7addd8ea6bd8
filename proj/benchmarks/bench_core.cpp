#include <benchmark/benchmark.h>

#include "lindsq/disentangle.hpp"
#include "lindsq/evolve.hpp"
#include "lindsq/fock.hpp"
#include "lindsq/model.hpp"
#include "lindsq/superop.hpp"

namespace {

using namespace lindsq;

const ModelParams kParams{1.0, 3.0, 1.0, complexd{1.0, 0.0}};

void BM_matmul(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    CMatrix a(n, n), b(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            a(i, j) = complexd{1.0 / double(i + j + 1), 0.5};
            b(i, j) = complexd{0.25, 1.0 / double(i + 2 * j + 1)};
        }
    for (auto _ : state) {
        CMatrix c = a * b;
        benchmark::DoNotOptimize(c.data());
    }
}
BENCHMARK(BM_matmul)->Arg(64)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

void BM_expm(benchmark::State& state) {
    const std::size_t d = static_cast<std::size_t>(state.range(0));
    const SuperOp l = liouvillian_original(kParams, d);
    for (auto _ : state) {
        CMatrix e = expm(l.mat, complexd{0.1, 0.0});
        benchmark::DoNotOptimize(e.data());
    }
}
BENCHMARK(BM_expm)->Arg(8)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);

void BM_liouvillian_build(benchmark::State& state) {
    const std::size_t d = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        SuperOp l = liouvillian_original(kParams, d);
        benchmark::DoNotOptimize(l.mat.data());
    }
}
BENCHMARK(BM_liouvillian_build)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_jacobi_eigenvalues(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    CMatrix h(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            h(i, j) = complexd{1.0 / double(i + j + 1), double(i) - double(j)};
    for (auto _ : state) {
        auto ev = hermitian_eigenvalues(h);
        benchmark::DoNotOptimize(ev.data());
    }
}
BENCHMARK(BM_jacobi_eigenvalues)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_operator_level_apply(benchmark::State& state) {
    const std::size_t d = static_cast<std::size_t>(state.range(0));
    const SqueezeSolution sq = solve_squeeze(kParams);
    const TransformedCoeffs tc = transformed_coeffs(kParams, sq);
    const DensityMatrix rho0 = coherent_state(complexd{0.8, 0.0}, d);
    const DisentangledFactors fh = hamiltonian_factors(kParams, sq, 0.7);
    const DisentangledFactors fd = dissipative_factors(tc, 0.7);
    for (auto _ : state) {
        CMatrix out = operator_level_apply(fh, fd, kParams.mu - kParams.nu, rho0.mat);
        benchmark::DoNotOptimize(out.data());
    }
}
BENCHMARK(BM_operator_level_apply)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
