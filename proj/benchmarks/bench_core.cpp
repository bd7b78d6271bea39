#include "qschub/mutation.hpp"

#include <benchmark/benchmark.h>

using namespace qschub;

namespace {

PositionTable borel(char type, int rank) {
    const RootDatum d = build_root_datum(type, rank);
    return fix_word(d, make_parabolic({}, d));
}

void BM_EnumerateWp(benchmark::State& state) {
    const RootDatum d = build_root_datum('B', static_cast<int>(state.range(0)));
    const ParabolicDatum p = make_parabolic({0}, d);
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_Wp(d, p));
}
BENCHMARK(BM_EnumerateWp)->Arg(2)->Arg(3)->Arg(4);

void BM_BuildSeed(benchmark::State& state) {
    const PositionTable t = borel('A', static_cast<int>(state.range(0)));
    const int m = t.M();
    for (auto _ : state) benchmark::DoNotOptimize(build_seed({0, m / 2, m}, Family::Standard, t));
}
BENCHMARK(BM_BuildSeed)->Arg(2)->Arg(3)->Arg(4);

void BM_LambdaMatrix(benchmark::State& state) {
    const PositionTable t = borel('G', 2);
    const Cluster c = build_cluster({0, 3, 6}, Family::Standard, t);
    for (auto _ : state) benchmark::DoNotOptimize(lambda_matrix(c.labels, t));
}
BENCHMARK(BM_LambdaMatrix);

void BM_SchubertMutate(benchmark::State& state) {
    const PositionTable t = borel('A', 3);
    for (auto _ : state)
        for (int b = 0; b < t.M(); ++b) benchmark::DoNotOptimize(schubert_mutate(0, b, t.M(), b + 1, t));
}
BENCHMARK(BM_SchubertMutate);

}  // namespace

BENCHMARK_MAIN();
