#include "kisinlab/kisin.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace kisinlab;

namespace {

Series random_series(const FieldPtr& F, std::mt19937_64& rng, int terms, std::int64_t span) {
    std::uniform_int_distribution<std::int64_t> exp(-span, span);
    std::uniform_int_distribution<Field::code_t> coeff(1, F->q() - 1);
    std::vector<Series::Term> t;
    for (int k = 0; k < terms; ++k) t.push_back({exp(rng), coeff(rng)});
    return Series::from_terms(F, std::move(t));
}

void BM_SeriesMul(benchmark::State& state) {
    const auto F = Field::make(3, 2);
    std::mt19937_64 rng(1);
    const int n = static_cast<int>(state.range(0));
    const Series f = random_series(F, rng, n, 4 * n), g = random_series(F, rng, n, 4 * n);
    for (auto _ : state) benchmark::DoNotOptimize(f * g);
    state.SetComplexityN(n);
}
BENCHMARK(BM_SeriesMul)->RangeMultiplier(4)->Range(4, 256)->Complexity();

void BM_SeriesInverse(benchmark::State& state) {
    const auto F = Field::make(3, 2);
    const Series f = parse_series(F, "1 + g*u + u^3");
    for (auto _ : state) benchmark::DoNotOptimize(inverse(f, state.range(0)));
}
BENCHMARK(BM_SeriesInverse)->Arg(16)->Arg(64)->Arg(256);

void BM_FieldMul(benchmark::State& state) {
    const auto F = Field::make(3, static_cast<std::uint32_t>(state.range(0)));
    std::mt19937_64 rng(2);
    std::uniform_int_distribution<Field::code_t> d(0, F->q() - 1);
    std::vector<Field::code_t> xs(1024);
    for (auto& x : xs) x = d(rng);
    for (auto _ : state) {
        Field::code_t acc = 1;
        for (auto x : xs) acc = F->mul(acc, x | 1);
        benchmark::DoNotOptimize(acc);
    }
}
// r = 7 falls back to polynomial arithmetic.
BENCHMARK(BM_FieldMul)->Arg(2)->Arg(5)->Arg(7);

void BM_ChangeBasis(benchmark::State& state) {
    const KisinParams P = make_params(3, 2, 8);
    const FieldPtr& F = P.field;
    const Mat2 B(parse_series(F, "u^-3"), parse_series(F, "g*u + u^2"), Series(F), parse_series(F, "u^3"));
    const BasisChange C(P, MatTuple({B, B}));
    const Presentation A = base_model(P);
    for (auto _ : state) benchmark::DoNotOptimize(change_basis(A, C));
}
BENCHMARK(BM_ChangeBasis);

void BM_Iwasawa(benchmark::State& state) {
    const auto F = Field::make(3, 2);
    // (1, g u^-2; 0, 1) (1, 0; u^-1 + u, 1), determinant 1
    const Mat2 B(parse_series(F, "g*u^-3 + g*u^-1 + 1"), parse_series(F, "g*u^-2"), parse_series(F, "u^-1 + u"),
                 parse_series(F, "1"));
    for (auto _ : state) benchmark::DoNotOptimize(iwasawa_normal_form(B, 64));
}
BENCHMARK(BM_Iwasawa);

}  // namespace
