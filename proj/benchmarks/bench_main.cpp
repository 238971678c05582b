#include <benchmark/benchmark.h>

#include "lrpc/decoders.hpp"
#include "lrpc/harness.hpp"

using namespace lrpc;

namespace {

void BM_FieldMul(benchmark::State& state) {
    auto f = Field::make(static_cast<std::uint32_t>(state.range(0)), static_cast<std::uint32_t>(state.range(1)));
    Rng rng(1);
    auto a = f->random_nonzero(rng);
    const auto b = f->random_nonzero(rng);
    for (auto _ : state) {
        a = f->mul(a, b);
        benchmark::DoNotOptimize(a);
    }
}
BENCHMARK(BM_FieldMul)->Args({2, 41})->Args({2, 64})->Args({3, 20})->Args({5, 12});

void BM_FieldInv(benchmark::State& state) {
    auto f = Field::make(static_cast<std::uint32_t>(state.range(0)), static_cast<std::uint32_t>(state.range(1)));
    Rng rng(2);
    const auto a = f->random_nonzero(rng);
    for (auto _ : state) benchmark::DoNotOptimize(f->inv(a));
}
BENCHMARK(BM_FieldInv)->Args({2, 41})->Args({3, 20});

void BM_Intersect(benchmark::State& state) {
    auto f = Field::make(2, 41);
    Rng rng(3);
    const auto dim = static_cast<std::uint32_t>(state.range(0));
    const auto u = random_subspace(f, dim, rng);
    const auto v = random_subspace(f, dim, rng);
    for (auto _ : state) benchmark::DoNotOptimize(intersect(u, v));
}
BENCHMARK(BM_Intersect)->Arg(10)->Arg(24);

void BM_ProductSpace(benchmark::State& state) {
    auto f = Field::make(2, 41);
    Rng rng(4);
    const auto a = random_subspace(f, 5, rng);
    const auto e = random_subspace(f, 5, rng);
    for (auto _ : state) benchmark::DoNotOptimize(product_space(a, e));
}
BENCHMARK(BM_ProductSpace);

void BM_Multiplicity(benchmark::State& state) {
    auto f = Field::make(2, 41);
    Rng rng(5);
    const auto inst = generate_instance(f, 25, 1, 5, 5, rng, 1000);
    if (!inst) {
        state.SkipWithError("instance generation failed");
        return;
    }
    const auto x = random_member(inst->error.support, rng);
    for (auto _ : state) benchmark::DoNotOptimize(multiplicity(x, inst->syndrome.support, inst->code.support));
}
BENCHMARK(BM_Multiplicity);

// One full trial at q=2, m=41, r=d=5, c=1, t=4: instance generation plus decoding.
void BM_IntersectTrial(benchmark::State& state) {
    ExperimentConfig cfg;
    cfg.m = 41;
    cfg.t = 4;
    cfg.trials = 1;
    std::uint64_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(run_trial(cfg, i++));
}
BENCHMARK(BM_IntersectTrial)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
