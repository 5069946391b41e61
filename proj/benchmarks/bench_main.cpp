// Copyright 2026 The frachz Authors.
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "frachz/fracops.hpp"
#include "frachz/fuzzy.hpp"
#include "frachz/loop.hpp"
#include "frachz/registry.hpp"
#include "frachz/tuner.hpp"

namespace {

using namespace frachz;

void BM_Infer(benchmark::State& state) {
  const FuzzyEngine engine(static_cast<int>(state.range(0)));
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> pts(1024);
  for (auto& p : pts) p = u(rng);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(engine.infer(pts[i % 1024], pts[(i + 7) % 1024]));
    ++i;
  }
}
BENCHMARK(BM_Infer)->Arg(201)->Arg(1001)->Arg(10001);

void BM_FilterStep(benchmark::State& state) {
  auto f = make_fractional_filter(0.5, 0.01, static_cast<int>(state.range(0)));
  double x = 0.0;
  for (auto _ : state) {
    x += 0.01;
    benchmark::DoNotOptimize(f.step(x));
  }
}
BENCHMARK(BM_FilterStep)->Arg(2)->Arg(5);

void BM_Simulate(benchmark::State& state) {
  const auto& row = published_rows()[static_cast<std::size_t>(state.range(0))];
  const auto plant = plant_preset(row.plant);
  const auto sc = default_scenario(row.plant, true);
  const auto settings = default_loop_settings(row.plant);
  for (auto _ : state) {
    benchmark::DoNotOptimize(evaluate_indices(plant, row.spec(), sc, settings));
  }
  state.SetLabel(std::string(row.plant) + " " + std::string(structure_tag(row.structure)));
}
BENCHMARK(BM_Simulate)->DenseRange(0, 14, 1)->Unit(benchmark::kMillisecond);

void BM_NondominatedSort(benchmark::State& state) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<std::vector<double>> pts(static_cast<std::size_t>(state.range(0)));
  for (auto& p : pts) p = {u(rng), u(rng)};
  for (auto _ : state) benchmark::DoNotOptimize(nondominated_sort(pts));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_NondominatedSort)->RangeMultiplier(2)->Range(50, 800)->Complexity();

}  // namespace

BENCHMARK_MAIN();
