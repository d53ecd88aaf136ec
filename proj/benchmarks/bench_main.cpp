#include <benchmark/benchmark.h>

#include "vade/algebra.hpp"
#include "vade/fusion.hpp"
#include "vade/modinv.hpp"
#include "vade/nimrep.hpp"
#include "vade/repcat.hpp"

namespace {

void BM_CyclotomicMul(benchmark::State& state) {
    const auto a = vade::qint(7, 30);
    const auto b = vade::qint(11, 30);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CyclotomicMul);

void BM_Qint(benchmark::State& state) {
    const int64_t l = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(vade::qint(l - 1, l));
}
BENCHMARK(BM_Qint)->Arg(12)->Arg(30)->Arg(66);

void BM_ModularData(benchmark::State& state) {
    const int k = (int)state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(vade::modular_data(k));
}
BENCHMARK(BM_ModularData)->Arg(10)->Arg(28);

void BM_VerlindeCheck(benchmark::State& state) {
    const int k = (int)state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(vade::verlinde_check(k));
}
BENCHMARK(BM_VerlindeCheck)->Arg(16)->Arg(28);

void BM_Classify(benchmark::State& state) {
    const int k = (int)state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(vade::classify_modules(k));
}
BENCHMARK(BM_Classify)->Arg(10)->Arg(28);

void BM_ExhaustiveSearch(benchmark::State& state) {
    const int k = (int)state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(vade::exhaustive_search(k, k + 2));
}
BENCHMARK(BM_ExhaustiveSearch)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_InvariantPipeline(benchmark::State& state) {
    const int k = (int)state.range(0);
    for (auto _ : state) {
        for (const auto& m : vade::classify_modules(k)) {
            const auto c = vade::analyze(m);
            if (!c.accepted()) continue;
            benchmark::DoNotOptimize(vade::invariant(vade::rep_data(c)));
        }
    }
}
BENCHMARK(BM_InvariantPipeline)->Arg(10)->Arg(28)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
