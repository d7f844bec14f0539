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

// Disparity accuracy metrics with masked, pixel-weighted and sample-averaged
// aggregation.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stereobench/sample.hpp"
#include "stereobench/types.hpp"

namespace stereobench {

enum class MaskMode { kAll, kNoc };

std::string_view mask_mode_name(MaskMode m);
std::optional<MaskMode> parse_mask_mode(std::string_view s);

struct MetricSpec {
  bool epe = true;
  std::vector<double> bad_thresholds;  // pixels, strict ">" comparison
  MaskMode mask = MaskMode::kAll;
  /// KITTI devkit D1: error > 3 px and > 5 % of the ground truth.
  bool d1_official = false;

  void validate() const;
  /// EPE everywhere plus bad-3 for KITTI, bad-2 for Middlebury, bad-1 for
  /// ETH3D and bad-1/bad-3 for SceneFlow.
  static MetricSpec for_dataset(Dataset d);

  bool operator==(const MetricSpec&) const = default;
};

/// Pixels valid in both maps and, when given, in `region`. Throws
/// kShapeMismatch on size disagreement and kPrecondition for flipped
/// (negative-disparity) estimates.
ValidMask joint_valid(const DisparityMap& est, const DisparityMap& gt,
                      const ValidMask* region = nullptr);

/// Mean |est - gt| over the joint valid set; kEmptyValidSet when empty.
double epe(const DisparityMap& est, const DisparityMap& gt,
           const ValidMask* region = nullptr);

/// Percentage of jointly valid pixels with |est - gt| > tau.
double bad_tau(const DisparityMap& est, const DisparityMap& gt, double tau,
               const ValidMask* region = nullptr);

/// Percentage with |est - gt| > 3 and |est - gt| > 0.05 * gt.
double d1_official(const DisparityMap& est, const DisparityMap& gt,
                   const ValidMask* region = nullptr);

struct MetricRow {
  std::string id;
  std::size_t valid_pixels = 0;
  std::optional<double> epe;
  std::vector<double> bad;  // aligned with MetricSpec::bad_thresholds
  std::optional<double> d1_official;

  bool operator==(const MetricRow&) const = default;
};

/// Every requested metric over the shared valid set. With MaskMode::kNoc the
/// non-occluded mask is required.
MetricRow evaluate_sample(std::string id, const DisparityMap& est,
                          const DisparityMap& gt, const MetricSpec& spec,
                          const ValidMask* nonoccluded = nullptr);

struct MetricAggregate {
  std::optional<double> epe;
  std::vector<double> bad;
  std::optional<double> d1_official;

  bool operator==(const MetricAggregate&) const = default;
};

struct EvalReport {
  MetricSpec spec;
  std::vector<MetricRow> rows;
  MetricAggregate pixel_weighted;  // sum(metric * count) / sum(count)
  MetricAggregate sample_mean;     // mean over rows
  std::size_t total_pixels = 0;
};

/// Aggregates rows in the order given. Throws kEmptyValidSet for no rows.
EvalReport aggregate(std::vector<MetricRow> rows, const MetricSpec& spec);

}  // namespace stereobench
