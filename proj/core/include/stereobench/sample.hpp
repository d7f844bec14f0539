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

#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "stereobench/types.hpp"

namespace stereobench {

enum class Dataset { kSceneFlow, kKitti2012, kKitti2015, kMiddlebury, kEth3d };

std::string_view dataset_name(Dataset d);
/// Accepts the canonical names ("sceneflow", "kitti2012", "kitti2015",
/// "middlebury", "eth3d"), case-insensitive.
std::optional<Dataset> parse_dataset(std::string_view name);

/// One rectified stereo pair with optional ground truth.
struct StereoSample {
  std::string id;
  Dataset dataset = Dataset::kSceneFlow;
  Image left;
  Image right;
  std::optional<DisparityMap> disparity_left;
  std::optional<DisparityMap> disparity_right;
  /// Pixels of the left view visible in the right view, when the dataset
  /// ships an occlusion mask (KITTI noc maps, Middlebury/ETH3D mask0nocc).
  std::optional<ValidMask> nonoccluded;

  /// Throws kShapeMismatch when views or ground truth disagree in size.
  void validate() const;

  bool operator==(const StereoSample&) const = default;
};

}  // namespace stereobench
