#include <benchmark/benchmark.h>

#include <random>

#include "multinet/analysis.hpp"
#include "multinet/search.hpp"
#include "multinet/section.hpp"

using namespace multinet;

namespace {

FieldElem sample(Field f, std::mt19937_64& rng) {
    std::uniform_int_distribution<long long> d(-20, 20);
    std::vector<Rational> poly;
    for (int i = 0; i < f.conductor(); ++i) poly.emplace_back(d(rng), 1 + (d(rng) & 3));
    return FieldElem::from_polynomial(f, poly);
}

void BM_FieldMultiply(benchmark::State& state) {
    const Field f = make_field(static_cast<int>(state.range(0)));
    std::mt19937_64 rng(1);
    const FieldElem a = sample(f, rng), b = sample(f, rng);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_FieldMultiply)->Arg(4)->Arg(8)->Arg(12)->Arg(16);

void BM_FieldInverse(benchmark::State& state) {
    const Field f = make_field(static_cast<int>(state.range(0)));
    std::mt19937_64 rng(2);
    const FieldElem a = sample(f, rng);
    for (auto _ : state) benchmark::DoNotOptimize(a.inverse());
}
BENCHMARK(BM_FieldInverse)->Arg(4)->Arg(8)->Arg(12)->Arg(16);

void BM_Restrict(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const QnArrangement qn(n, make_field(n));
    const PlaneP3 h = PlaneP3::from_integers(qn.field(), {1, 2, 5, 11});
    for (auto _ : state) benchmark::DoNotOptimize(restrict_to_plane(qn, h));
}
BENCHMARK(BM_Restrict)->Arg(4)->Arg(8)->Arg(12);

void BM_BaseLocus(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const QnArrangement qn(n, make_field(n));
    const Multinet m = restrict_to_plane(qn, PlaneP3::from_integers(qn.field(), {1, 2, 5, 11})).as_multinet();
    for (auto _ : state) benchmark::DoNotOptimize(base_locus(m));
}
BENCHMARK(BM_BaseLocus)->Arg(4)->Arg(8);

void BM_ClassifyEightPointPlane(benchmark::State& state) {
    const QnArrangement qn(8, make_field(8));
    const PlaneP3 h = example46_plane(qn.field());
    for (auto _ : state) benchmark::DoNotOptimize(classify_induced(restrict_to_plane(qn, h)));
}
BENCHMARK(BM_ClassifyEightPointPlane)->Unit(benchmark::kMillisecond);

void BM_SearchUnitTriples(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const QnArrangement qn(n, make_field(n));
    SearchConfig cfg;
    cfg.require_light = true;
    cfg.forbid_fixed = true;
    cfg.forbid_mult_n_points = true;
    cfg.threads = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(run_search(cfg, qn));
}
BENCHMARK(BM_SearchUnitTriples)->Args({6, 1})->Args({8, 1})->Args({8, 4})->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
