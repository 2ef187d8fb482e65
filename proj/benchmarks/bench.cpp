#include <benchmark/benchmark.h>

#include "tenring/gorenstein.hpp"
#include "tenring/hom.hpp"

namespace {

using namespace tenring;

const FieldSpec F7{7};

struct Preset {
    PathAlgebra pa = path_algebra({3, 2, F7});
    FdBimodule m;

    Preset() {
        FdModule reg_l = regular_module(pa.algebra, Side::left);
        FdModule reg_r = regular_module(pa.algebra, Side::right);
        FdModule re =
            submodule(reg_l, pa.algebra.right_mult(pa.idempotents[0])).module;
        FdModule er =
            submodule(reg_r, pa.algebra.left_mult(pa.idempotents[2])).module;
        m = bimodule_tensor_k(re, er);
    }
};

void bm_rref(benchmark::State& state) {
    Rng rng(1);
    std::size_t n = static_cast<std::size_t>(state.range(0));
    ExactMatrix m = rng.matrix(n, n, F7);
    for (auto _ : state) benchmark::DoNotOptimize(m.rref());
}
BENCHMARK(bm_rref)->Arg(16)->Arg(64)->Arg(128);

void bm_kernel_basis(benchmark::State& state) {
    Rng rng(2);
    std::size_t n = static_cast<std::size_t>(state.range(0));
    ExactMatrix m = rng.matrix(n / 2, n, F7);
    for (auto _ : state) benchmark::DoNotOptimize(m.kernel_basis());
}
BENCHMARK(bm_kernel_basis)->Arg(32)->Arg(128);

void bm_tensor_ring_build(benchmark::State& state) {
    Preset p;
    for (auto _ : state)
        benchmark::DoNotOptimize(tensor_ring(p.pa.algebra, p.m));
}
BENCHMARK(bm_tensor_ring_build);

void bm_resolution(benchmark::State& state) {
    Preset p;
    FdModule s = simple_of_idempotent(p.pa.algebra, p.pa.idempotents[0]);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            minimal_projective_resolution(s, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(bm_resolution)->Arg(8)->Arg(20);

void bm_hom_space(benchmark::State& state) {
    Preset p;
    FdModule reg = regular_module(p.pa.algebra, Side::left);
    for (auto _ : state) benchmark::DoNotOptimize(hom_space(reg, reg));
}
BENCHMARK(bm_hom_space);

void bm_pgf_verdict(benchmark::State& state) {
    Preset p;
    TensorRingContext ctx = tensor_ring(p.pa.algebra, p.m);
    Rng rng(3);
    PairModule pair = random_pair(ctx, rng, 4);
    FdModule t = pair_to_module(ctx, pair);
    for (auto _ : state) benchmark::DoNotOptimize(is_pgf(t));
}
BENCHMARK(bm_pgf_verdict);

}  // namespace

BENCHMARK_MAIN();
