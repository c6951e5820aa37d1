#include <benchmark/benchmark.h>

#include <cstdint>

#include "coopsec/montecarlo.hpp"
#include "coopsec/placement.hpp"
#include "coopsec/secrecy.hpp"

namespace {

using namespace coopsec;

Scenario iud_scenario(double n_t, double n_e) {
  Scenario s;
  s.tx_process = ProcessSpec{ProcessFamily::Iud, n_t};
  s.eve_process = ProcessSpec{ProcessFamily::Iud, n_e};
  s.strategy.strategy = Strategy::CoopTransmit;
  return s;
}

void BM_SampleIud(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::uint64_t stream = 0;
  for (auto _ : state) {
    auto points = sample_iud(n, Region{}, SeedStream{42, stream++});
    benchmark::DoNotOptimize(points.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SampleIud)->Arg(10)->Arg(100)->Arg(1000);

void BM_SamplePoisson(benchmark::State& state) {
  const auto rate = static_cast<double>(state.range(0));
  std::uint64_t stream = 0;
  for (auto _ : state) {
    auto points = sample_poisson(rate, Region{}, SeedStream{42, stream++});
    benchmark::DoNotOptimize(points.data());
  }
}
BENCHMARK(BM_SamplePoisson)->Arg(5)->Arg(50);

void BM_HexLattice(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto points = hex_lattice(n, Region{});
    benchmark::DoNotOptimize(points.data());
  }
}
BENCHMARK(BM_HexLattice)->Arg(10)->Arg(100);

void BM_Covered(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto tx = sample_iud(n, Region{}, SeedStream{1, 0});
  const auto eaves = sample_iud(n, Region{}, SeedStream{1, 1});
  Pcg32 rng(SeedStream{1, 2});
  for (auto _ : state) {
    const Point receiver{rng.next_double(), rng.next_double()};
    benchmark::DoNotOptimize(covered(tx, eaves, receiver));
  }
}
BENCHMARK(BM_Covered)->Arg(5)->Arg(10)->Arg(20);

void BM_RunTrial(benchmark::State& state) {
  const auto scenario = iud_scenario(10, 5);
  std::uint64_t trial = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_trial(scenario, trial++, 42));
  }
}
BENCHMARK(BM_RunTrial);

void BM_Estimate(benchmark::State& state) {
  const auto scenario = iud_scenario(10, 5);
  const auto trials = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(estimate(scenario, trials, 42, 1));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Estimate)->Arg(10000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
