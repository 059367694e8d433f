// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include <vector>

#include "wetbeam/angles.hpp"
#include "wetbeam/channel.hpp"
#include "wetbeam/codebook.hpp"
#include "wetbeam/crlb.hpp"
#include "wetbeam/estimator.hpp"
#include "wetbeam/rng.hpp"
#include "wetbeam/rssi_sim.hpp"

using namespace wetbeam;

namespace {

std::vector<double> sample_feedback(std::size_t n) {
  const PhaseSet thetas = make_theta(n);
  RngStream rng(1, 1);
  std::vector<double> r(n);
  for (std::size_t m = 0; m < n; ++m) {
    r[m] = rssi_mean(PairParams{1.0, 0.8, 0.4}, thetas.theta(m)) +
           0.1 * rng.next_gaussian();
  }
  return r;
}

void BM_Philox(benchmark::State& state) {
  std::array<std::uint32_t, 4> ctr{0, 0, 0, 0};
  const std::array<std::uint32_t, 2> key{1, 2};
  for (auto _ : state) {
    ++ctr[3];
    benchmark::DoNotOptimize(philox4x32(ctr, key));
  }
}
BENCHMARK(BM_Philox);

void BM_EstimatePhase(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const PhaseSet thetas = make_theta(n);
  const std::vector<double> r = sample_feedback(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(estimate_phase(r, thetas).resolved);
  }
}
BENCHMARK(BM_EstimatePhase)->Arg(3)->Arg(8)->Arg(32);

void BM_Mcrlb(benchmark::State& state) {
  const PhaseSet thetas = make_theta(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mcrlb(thetas, 1.0, 1.0));
  }
}
BENCHMARK(BM_Mcrlb)->Arg(8)->Arg(32)->Arg(64);

void BM_RunTraining(benchmark::State& state) {
  const std::size_t antennas = static_cast<std::size_t>(state.range(0));
  RngStream ch(3, 2);
  const ChannelVector h = sample_channel(ChannelModel::unit_magnitude(), antennas, ch);
  const PhaseSet thetas = make_theta(4);
  const SystemParams sys(1.0, 2.0);
  std::uint64_t trial = 0;
  for (auto _ : state) {
    const TrainingTable t =
        run_training(h, thetas, sys, NoiseModel{0.01}, RngStream(9, 1, trial++));
    benchmark::DoNotOptimize(t.records.back().value);
  }
}
BENCHMARK(BM_RunTraining)->Arg(2)->Arg(10);

void BM_ExhaustiveBaseline(benchmark::State& state) {
  const std::size_t antennas = static_cast<std::size_t>(state.range(0));
  RngStream ch(4, 2);
  const ChannelVector h = sample_channel(ChannelModel::unit_magnitude(), antennas, ch);
  const SystemParams sys(1.0, 2.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        exhaustive_baseline(h, sys, kTwoPi / 360.0).phases.back());
  }
}
BENCHMARK(BM_ExhaustiveBaseline)->Arg(2)->Arg(3)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
