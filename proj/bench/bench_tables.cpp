#include "oddarc/associator.hpp"

#include <benchmark/benchmark.h>

using namespace oddarc;

namespace {

void BM_ProductTableSerial(benchmark::State& st) {
    const MultiplicationRule rule = MultiplicationRule::standard(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(product_table_serial(rule, Theory::Odd));
}

void BM_ProductTableParallel(benchmark::State& st) {
    const MultiplicationRule rule = MultiplicationRule::standard(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(product_table(rule, Theory::Odd));
}

void BM_Phi0TableSerial(benchmark::State& st) {
    const MultiplicationRule rule = MultiplicationRule::standard(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(phi0_table_serial(rule));
}

void BM_Phi0TableParallel(benchmark::State& st) {
    const MultiplicationRule rule = MultiplicationRule::standard(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(phi0_table(rule));
}

}  // namespace

BENCHMARK(BM_ProductTableSerial)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ProductTableParallel)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Phi0TableSerial)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Phi0TableParallel)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
