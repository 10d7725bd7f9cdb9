#include <cmath>

#include <benchmark/benchmark.h>

#include "fluidcomp/beamforming.hpp"
#include "fluidcomp/positioning.hpp"
#include "fluidcomp/power_alloc.hpp"
#include "fluidcomp/solver.hpp"

using namespace fluidcomp;

namespace {

struct Fixture {
  SystemConfig config;
  Scenario scenario;
  ChannelMatrix channels;
  TransceiverState state;

  Fixture(int n, int k)
      : config(SystemConfig::with_defaults(n, k)),
        scenario(generate_scenario(config, 1)),
        channels(channel_matrix(scenario, scenario.initial_positions, config)) {
    state.positions = scenario.initial_positions;
    const CVector m0 = CVector::Constant(n, 1.0 / std::sqrt(double(n)));
    state.weights = solve_power(m0, channels, config, config.total_power).weights;
    state.beamformer = solve_beamformer(state.weights, channels, config);
    state.mse = mse(state.weights, state.beamformer, channels, config);
  }
};

void BM_Mse(benchmark::State& st) {
  const Fixture f(st.range(0), st.range(1));
  for (auto _ : st) {
    benchmark::DoNotOptimize(mse(f.state.weights, f.state.beamformer, f.channels, f.config));
  }
}

void BM_SolvePower(benchmark::State& st) {
  const Fixture f(st.range(0), st.range(1));
  for (auto _ : st) {
    benchmark::DoNotOptimize(
        solve_power(f.state.beamformer, f.channels, f.config, f.config.total_power));
  }
}

void BM_SolveBeamformer(benchmark::State& st) {
  const Fixture f(st.range(0), st.range(1));
  for (auto _ : st) {
    benchmark::DoNotOptimize(solve_beamformer(f.state.weights, f.channels, f.config));
  }
}

void BM_OptimizePositions(benchmark::State& st) {
  const Fixture f(st.range(0), st.range(1));
  for (auto _ : st) {
    benchmark::DoNotOptimize(optimize_positions(f.state, f.scenario, f.config));
  }
}

void BM_BcdSolve(benchmark::State& st) {
  const Fixture f(st.range(0), st.range(1));
  for (auto _ : st) {
    benchmark::DoNotOptimize(bcd_solve(f.scenario, f.config));
  }
}

}  // namespace

BENCHMARK(BM_Mse)->Args({4, 8})->Args({10, 10})->Args({10, 100});
BENCHMARK(BM_SolvePower)->Args({4, 8})->Args({10, 10})->Args({10, 100});
BENCHMARK(BM_SolveBeamformer)->Args({4, 8})->Args({10, 10})->Args({10, 100});
BENCHMARK(BM_OptimizePositions)->Args({4, 8})->Args({10, 10})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BcdSolve)->Args({4, 8})->Args({10, 10})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
