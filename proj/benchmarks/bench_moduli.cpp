#include "kisinlab/connect.hpp"

#include <benchmark/benchmark.h>

using namespace kisinlab;

namespace {

void BM_Enumerate_3_2(benchmark::State& state) {
    const KisinParams P = make_params(3, 2, state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_models(P));
}
BENCHMARK(BM_Enumerate_3_2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_EnumerateThreads(benchmark::State& state) {
    const KisinParams P = make_params(3, 2, 8);
    EnumerateOptions o;
    o.threads = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_models(P, o));
}
BENCHMARK(BM_EnumerateThreads)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_Oracle(benchmark::State& state) {
    const KisinParams P = make_params(3, 2, 8);
    OracleOptions o;
    o.box = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(brute_force_lattices(P, o));
}
BENCHMARK(BM_Oracle)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_Connectivity(benchmark::State& state) {
    const ModelSet ms = enumerate_models(make_params(3, 2, 8));
    for (auto _ : state) benchmark::DoNotOptimize(verify_nonordinary_connected(ms));
}
BENCHMARK(BM_Connectivity)->Unit(benchmark::kMillisecond);

}  // namespace
