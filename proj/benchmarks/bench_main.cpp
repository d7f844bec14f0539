// Copyright 2026 The stereobench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <random>

#include "stereobench/aggregation.hpp"
#include "stereobench/cost_volume.hpp"
#include "stereobench/features.hpp"
#include "stereobench/pipeline.hpp"
#include "stereobench/synthetic.hpp"

namespace sb = stereobench;

namespace {

sb::FeatureMap random_features(int c, int h, int w, unsigned seed) {
  std::mt19937 gen(seed);
  std::uniform_real_distribution<float> dist(-1.0f, 1.0f);
  sb::FeatureMap f(c, h, w);
  for (float& v : f.data()) v = dist(gen);
  return f;
}

sb::CostVolume random_volume(int d, int h, int w) {
  std::mt19937 gen(7);
  std::uniform_real_distribution<float> dist(0.0f, 1.0f);
  sb::CostVolume v = sb::allocate_volume(1, d, h, w);
  v.set_roles({sb::GroupRole::kCost});
  for (float& c : v.data()) c = dist(gen);
  return v;
}

// KITTI-sized input at 1/4 resolution: 96 x 312 with 48 hypotheses.
void BM_BuildVolume(benchmark::State& state) {
  const auto kind = static_cast<sb::CostKind>(state.range(0));
  const sb::FeatureMap l = random_features(32, 96, 312, 1);
  const sb::FeatureMap r = random_features(32, 96, 312, 2);
  sb::CostConfig cfg;
  cfg.kind = kind;
  cfg.groups = 8;
  cfg.cat_channels = 8;
  for (auto _ : state) benchmark::DoNotOptimize(sb::build_volume(l, r, cfg));
  state.SetLabel(std::string(sb::cost_kind_name(kind)));
}
BENCHMARK(BM_BuildVolume)
    ->Arg(static_cast<int>(sb::CostKind::kDifference))
    ->Arg(static_cast<int>(sb::CostKind::kCorrelation))
    ->Arg(static_cast<int>(sb::CostKind::kGroupwise))
    ->Arg(static_cast<int>(sb::CostKind::kConcat))
    ->Arg(static_cast<int>(sb::CostKind::kCombined))
    ->Unit(benchmark::kMillisecond);

void BM_Sgm(benchmark::State& state) {
  const sb::CostVolume v = random_volume(48, 96, 312);
  sb::SgmConfig cfg;
  cfg.paths = static_cast<int>(state.range(0));
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(sb::sgm_aggregate(v, cfg, threads));
}
BENCHMARK(BM_Sgm)->Args({4, 1})->Args({8, 1})->Args({8, 4})->Unit(benchmark::kMillisecond);

void BM_Census(benchmark::State& state) {
  sb::StereogramConfig sc;
  sc.height = 384;
  sc.width = 1248;
  const sb::StereoSample s = sb::random_dot_stereogram(sc, "bench");
  sb::FeatureConfig cfg;
  cfg.scale = 1;
  cfg.window = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sb::extract(s.left, cfg));
}
BENCHMARK(BM_Census)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_Pipeline(benchmark::State& state) {
  sb::StereogramConfig sc;
  const sb::StereoSample s = sb::random_dot_stereogram(sc, "bench");
  sb::PipelineConfig cfg;
  cfg.feature.scale = 1;
  for (auto _ : state) benchmark::DoNotOptimize(sb::estimate_disparity(s.left, s.right, cfg, 1));
}
BENCHMARK(BM_Pipeline)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
