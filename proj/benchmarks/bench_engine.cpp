#include <benchmark/benchmark.h>

#include <memtp/cones.hpp>
#include <memtp/engine.hpp>
#include <memtp/schedule.hpp>
#include <memtp/thermo.hpp>

using namespace memtp;

namespace {

// One truncated beta-swap on a qutrit: N^2 elementary steps.
void BM_TruncatedSwap(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const EnergySpectrum system({0.0, 1.0, 2.0});
    const Distribution p({0.7, 0.2, 0.1});
    for (auto _ : state) {
        auto q = run_full_swap(p, system, 1.0, 0, 1, n);
        benchmark::DoNotOptimize(q);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_TruncatedSwap)->RangeMultiplier(2)->Range(8, 256)->Complexity(benchmark::oNSquared);

void BM_ComposedCycle(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const EnergySpectrum system({0.0, 1.0, 2.0, 3.0, 4.0, 5.0});
    const Distribution p({0.3, 0.25, 0.2, 0.12, 0.08, 0.05});
    const auto gamma = gibbs_state(system, 0.1);
    const auto order = beta_order(p, gamma);
    const auto target = beta_cycle_permutation(p, gamma, order.order, CycleDirection::Forward);
    const auto chain = decompose_neighbour_transpositions(order, target);
    for (auto _ : state) {
        auto q = run_composed(p, system, 0.1, chain, n, Mode::Truncated);
        benchmark::DoNotOptimize(q);
    }
}
BENCHMARK(BM_ComposedCycle)->RangeMultiplier(2)->Range(8, 64);

void BM_FutureConeVertices(benchmark::State& state) {
    const auto d = static_cast<std::size_t>(state.range(0));
    std::vector<double> e(d), w(d);
    double total = 0.0;
    for (std::size_t k = 0; k < d; ++k) {
        e[k] = static_cast<double>(k);
        w[k] = 1.0 / static_cast<double>(k + 2);
        total += w[k];
    }
    for (auto& x : w) x /= total;
    const Distribution p(w);
    const auto gamma = gibbs_state(EnergySpectrum(e), 0.5);
    for (auto _ : state) {
        auto v = future_cone_vertices(p, gamma);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_FutureConeVertices)->DenseRange(3, 7);

} // namespace

BENCHMARK_MAIN();
