#include <benchmark/benchmark.h>

#include <random>

#include "hyperstrata/bounds.hpp"
#include "hyperstrata/covering.hpp"
#include "hyperstrata/poset.hpp"
#include "hyperstrata/realize.hpp"

using namespace hyperstrata;

namespace {

void BM_census(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int s = static_cast<int>(state.range(1));
    for (auto _ : state) {
        auto fams = enumerate_potential(n, s);
        benchmark::DoNotOptimize(fams);
    }
}
BENCHMARK(BM_census)->Args({6, 4})->Args({8, 4})->Args({9, 4})->Args({9, 5})
    ->Unit(benchmark::kMillisecond);

void BM_min_cover(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int s = static_cast<int>(state.range(1));
    auto fams = enumerate_potential(n, s);
    for (auto _ : state) {
        auto cover = min_cover(fams, n, s, CoverMethod::kExact);
        benchmark::DoNotOptimize(cover);
    }
}
BENCHMARK(BM_min_cover)->Args({8, 4})->Args({9, 4})->Unit(benchmark::kMicrosecond);

void BM_poset_pipeline(benchmark::State& state) {
    auto fams = enumerate_potential(7, 4);
    for (auto _ : state) {
        for (const auto& fam : fams) {
            StrataPoset poset = build_poset(fam, 7, 4);
            annotate_min_max(poset);
            DualComplex complex = dual_complex(poset);
            auto order = shelling_order(poset);
            auto rep = verify_shelling(complex, order);
            benchmark::DoNotOptimize(rep);
        }
    }
}
BENCHMARK(BM_poset_pipeline)->Unit(benchmark::kMillisecond);

void BM_realize_slice(benchmark::State& state) {
    HyperbolicPoly g = HyperbolicPoly::from_coeffs({0, -21.0 / 4, 1, 21.0 / 4, 0, -1});
    SolveConfig cfg;
    cfg.seed = 1;
    for (auto _ : state) {
        SliceRealization r = realize_slice(g, 3, cfg);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_realize_slice)->Unit(benchmark::kMillisecond);

void BM_leq_partition(benchmark::State& state) {
    auto ps = enumerate_partitions(9, 5);
    auto qs = enumerate_partitions(9, 8);
    for (auto _ : state) {
        for (const auto& p : ps)
            for (const auto& q : qs) benchmark::DoNotOptimize(leq_partition(p, q));
    }
}
BENCHMARK(BM_leq_partition)->Unit(benchmark::kMicrosecond);

void BM_hyperbolicity_gate(benchmark::State& state) {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> d(-20, 20);
    std::vector<double> roots;
    for (int i = 0; i < 8; ++i) roots.push_back(d(rng));
    std::vector<double> coeffs = coeffs_from_roots(roots);
    for (auto _ : state) benchmark::DoNotOptimize(is_hyperbolic(coeffs));
}
BENCHMARK(BM_hyperbolicity_gate)->Unit(benchmark::kMicrosecond);

} // namespace

BENCHMARK_MAIN();
