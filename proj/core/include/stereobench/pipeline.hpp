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

// End-to-end disparity estimation from a rectified pair.

#pragma once

#include "stereobench/aggregation.hpp"
#include "stereobench/cost_volume.hpp"
#include "stereobench/disparity.hpp"
#include "stereobench/features.hpp"
#include "stereobench/refine.hpp"
#include "stereobench/types.hpp"

namespace stereobench {

enum class AggregateMethod { kNone, kBox, kSgm, kBoxSgm };

std::string_view aggregate_method_name(AggregateMethod m);
std::optional<AggregateMethod> parse_aggregate_method(std::string_view s);

struct AggregateConfig {
  AggregateMethod method = AggregateMethod::kSgm;
  int box_radius = 1;  // box and box_sgm
  SgmConfig sgm;

  void validate() const;
  bool operator==(const AggregateConfig&) const = default;
};

struct PipelineConfig {
  FeatureConfig feature;
  CostConfig cost;
  AggregateConfig aggregate;
  RegressionConfig regress;
  RefineConfig refine;

  /// Validates every stage and their interplay (channel counts, groups).
  void validate() const;
  bool operator==(const PipelineConfig&) const = default;
};

/// Features, cost volume, group reduction, aggregation and regression at
/// feature resolution; no upsampling or refinement.
DisparityMap estimate_raw(const Image& left, const Image& right,
                          const PipelineConfig& cfg, int threads = 1);

/// Full pipeline. When upsampling is enabled the result has the input size.
/// The left-right check runs the same pipeline on the mirrored, swapped pair
/// to obtain the right-view disparity.
DisparityMap estimate_disparity(const Image& left, const Image& right,
                                const PipelineConfig& cfg, int threads = 1);

}  // namespace stereobench
