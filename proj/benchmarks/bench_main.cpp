#include <benchmark/benchmark.h>

#include <random>

#include "gnq/gpoly.hpp"
#include "gnq/pptest.hpp"
#include "gnq/search.hpp"
#include "gnq/tower.hpp"

using namespace gnq;

// args: q, e
static void BM_ExtMul(benchmark::State& st) {
    ExtField K(BaseField::get(static_cast<unsigned>(st.range(0))), static_cast<unsigned>(st.range(1)));
    std::mt19937_64 rng(1);
    Elem a = K.element(rng() % K.size()), b = K.element(rng() % K.size());
    for (auto _ : st) {
        a = K.mul(a, b);
        benchmark::DoNotOptimize(a);
    }
}
BENCHMARK(BM_ExtMul)->Args({3, 6})->Args({4, 6})->Args({3, 18})->Args({67, 2});

static void BM_ArtinSchreier(benchmark::State& st) {
    auto T = FieldTower::make(3, 1, static_cast<unsigned>(st.range(0)));
    const ExtField& K = T->ext();
    std::uint64_t i = 0;
    for (auto _ : st) benchmark::DoNotOptimize(T->solve_artin_schreier(K.element(i++ % K.size())));
}
BENCHMARK(BM_ArtinSchreier)->Arg(2)->Arg(4)->Arg(6);

// eval_g (square and multiply) vs the digit-product evaluator at one point
static void BM_EvalRecur(benchmark::State& st) {
    auto C = GContext::make(3, 4);
    const ExtField& K = C.field();
    const BigInt n = 91525;
    std::uint64_t i = 0;
    for (auto _ : st) benchmark::DoNotOptimize(eval_g(n, C, K.element(i++ % K.size())));
}
BENCHMARK(BM_EvalRecur);

static void BM_EvalDigits(benchmark::State& st) {
    auto ev = GEvaluator::shared(3, 4);
    const ExtField& K = ev->context().field();
    const BigInt n = 91525;
    std::uint64_t i = 0;
    for (auto _ : st) benchmark::DoNotOptimize(ev->eval(n, K.element(i++ % K.size())));
}
BENCHMARK(BM_EvalDigits);

static void BM_EvalFunctional(benchmark::State& st) {
    auto C = GContext::make(3, 4);
    const ExtField& K = C.field();
    const BigInt n = 91525;
    std::uint64_t i = 0;
    for (auto _ : st) benchmark::DoNotOptimize(eval_g_functional(n, C, K.element(i++ % K.size())));
}
BENCHMARK(BM_EvalFunctional);

// full desirability scan, desirable index (no early exit)
static void BM_DesirableScan(benchmark::State& st) {
    auto ev = GEvaluator::shared(3, 4);
    DesirableScanner sc(*ev);
    auto d = ev->index_digits(91525);
    for (auto _ : st) benchmark::DoNotOptimize(sc.test(d.data()));
}
BENCHMARK(BM_DesirableScan);

static void BM_SearchAll(benchmark::State& st) {
    SearchJob job;
    job.q = static_cast<unsigned>(st.range(0));
    job.e = static_cast<unsigned>(st.range(1));
    job.budget = 1u << 26;
    for (auto _ : st) benchmark::DoNotOptimize(search_all(job).size());
}
BENCHMARK(BM_SearchAll)->Args({3, 3})->Args({4, 3})->Unit(benchmark::kMillisecond);

static void BM_SearchQab(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(search_qab(static_cast<unsigned>(st.range(0))).size());
}
BENCHMARK(BM_SearchQab)->Arg(13)->Arg(31)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
