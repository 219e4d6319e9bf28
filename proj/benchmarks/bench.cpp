#include <benchmark/benchmark.h>

#include "hyperwitness/noise.hpp"
#include "hyperwitness/pauli.hpp"
#include "hyperwitness/state.hpp"

namespace hw = hyperwitness;

namespace {

void BM_HyperState(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(hw::hyper_state(0.1, 0.2, 0.3));
    }
}
BENCHMARK(BM_HyperState);

void BM_PauliExpectationPure(benchmark::State& state) {
    auto psi = hw::hyper_state(0.0, 0.0, 0.0);
    auto op = hw::stabilizer(1) * hw::stabilizer(3) * hw::stabilizer(5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(hw::pauli_expectation(psi, op));
    }
}
BENCHMARK(BM_PauliExpectationPure);

void BM_PauliExpectationMixed(benchmark::State& state) {
    auto rho = hw::white_noise(hw::density(hw::hyper_state(0.0, 0.0, 0.0)), 0.1);
    auto op = hw::stabilizer(1) * hw::stabilizer(3) * hw::stabilizer(5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(hw::pauli_expectation(rho, op));
    }
}
BENCHMARK(BM_PauliExpectationMixed);

void BM_EvaluateWitness(benchmark::State& state) {
    auto rho = hw::white_noise(hw::density(hw::hyper_state(0.0, 0.0, 0.0)), 0.1);
    auto kind = static_cast<hw::WitnessKind>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(hw::evaluate_witness(rho, kind));
    }
}
BENCHMARK(BM_EvaluateWitness)
    ->Arg(static_cast<int>(hw::WitnessKind::Wpi))
    ->Arg(static_cast<int>(hw::WitnessKind::W2))
    ->Arg(static_cast<int>(hw::WitnessKind::W3));

void BM_Eigenvalues64(benchmark::State& state) {
    auto rho = hw::white_noise(hw::density(hw::hyper_state(0.0, 0.0, 0.0)), 0.2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(rho.eigenvalues());
    }
}
BENCHMARK(BM_Eigenvalues64);

void BM_PartialTraceToParty(benchmark::State& state) {
    auto rho = hw::density(hw::hyper_state(0.0, 0.0, 0.0));
    auto split = hw::party_split();
    for (auto _ : state) {
        benchmark::DoNotOptimize(hw::partial_trace(rho, split.side_a));
    }
}
BENCHMARK(BM_PartialTraceToParty);

void BM_NoiseThreshold(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            hw::witness_noise_threshold(hw::WitnessKind::W2, hw::NoiseChannel::White, 1e-6));
    }
}
BENCHMARK(BM_NoiseThreshold);

}  // namespace

BENCHMARK_MAIN();
