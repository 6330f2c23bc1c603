#include <benchmark/benchmark.h>

#include <memtp/closed_form.hpp>
#include <memtp/special.hpp>

using namespace memtp;

namespace {

void BM_RegIncBeta(benchmark::State& state) {
    const double a = static_cast<double>(state.range(0));
    double x = 0.05;
    for (auto _ : state) {
        benchmark::DoNotOptimize(reg_inc_beta(x, a, a + 1.0));
        x = x < 0.9 ? x + 0.01 : 0.05;
    }
}
BENCHMARK(BM_RegIncBeta)->RangeMultiplier(8)->Range(1, 4096);

void BM_ErrorE(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const PairGibbsFactors pair(0.6);
    for (auto _ : state) benchmark::DoNotOptimize(error_E(n, pair));
}
BENCHMARK(BM_ErrorE)->RangeMultiplier(4)->Range(4, 4096);

} // namespace
