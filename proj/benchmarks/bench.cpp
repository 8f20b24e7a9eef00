#include "khi/homology.hpp"
#include "khi/invariants.hpp"

#include <benchmark/benchmark.h>

using namespace khi;

static void BM_two_bridge_build(benchmark::State& state) {
    for (auto _ : state) {
        Diagram D = build_named("7_4b");
        benchmark::DoNotOptimize(D.n_edges);
    }
}
BENCHMARK(BM_two_bridge_build);

static void BM_complex_build(benchmark::State& state) {
    Diagram D = build_named("7_4b");
    for (auto _ : state) {
        Complex C = build_involutive(D, Ring::F2H_hH, ConeMode::tau, Variant::reduced);
        benchmark::DoNotOptimize(C.n_gens);
    }
}
BENCHMARK(BM_complex_build);

static void BM_homology_reduced(benchmark::State& state) {
    static const char* names[] = {"3_1", "5_2a", "7_4b"};
    Diagram D = build_named(names[state.range(0)]);
    Complex C = build_involutive(D, Ring::F2H_hH, ConeMode::tau, Variant::reduced);
    for (auto _ : state) {
        HomologySolver S(C);
        benchmark::DoNotOptimize(S.module().total_free());
    }
}
BENCHMARK(BM_homology_reduced)->DenseRange(0, 2);

static void BM_s_pair(benchmark::State& state) {
    Diagram D = build_named("5_2a");
    for (auto _ : state) {
        SPair p = tower_s(D, ConeMode::tau);
        benchmark::DoNotOptimize(p.s_upper);
    }
}
BENCHMARK(BM_s_pair);

static void BM_snf(benchmark::State& state) {
    // a dense homogeneous-looking matrix of monomials
    int n = (int)state.range(0);
    std::vector<std::vector<Poly>> M(n, std::vector<Poly>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if ((i * 7 + j * 13) % 3) M[i][j] = Poly::monomial((i + j) % 4);
    for (auto _ : state) {
        auto d = snf(M);
        benchmark::DoNotOptimize(d.size());
    }
}
BENCHMARK(BM_snf)->Arg(16)->Arg(64);

BENCHMARK_MAIN();
