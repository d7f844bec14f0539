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

// Random-dot stereograms with planted piecewise-constant disparities, used
// as exact ground truth for end-to-end checks.

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "stereobench/sample.hpp"

namespace stereobench {

struct StereogramConfig {
  int height = 256;
  int width = 256;
  int max_disparity = 32;  // inclusive upper bound of planted disparities
  int min_disparity = 2;
  int objects = 5;         // fronto-parallel rectangles over the background
  int min_object_size = 24;
  int max_object_size = 96;
  int channels = 1;
  std::uint64_t seed = 0;
};

/// Left view of i.i.d. uniform dots; the right view is its forward warp with
/// z-buffering (larger disparity wins) and fresh dots where nothing lands.
/// Left ground truth is dense and integer-valued; `nonoccluded` marks left
/// pixels visible in the right view; right ground truth is valid where a
/// left pixel landed.
StereoSample random_dot_stereogram(const StereogramConfig& cfg, std::string id);

/// Writes samples as a KITTI 2015 training tree (image_2, image_3,
/// disp_occ_0, disp_noc_0) so they can be consumed through manifests. Ids
/// must follow the KITTI frame naming (ending in "_10").
void write_kitti2015_tree(const std::filesystem::path& root,
                          const std::vector<StereoSample>& samples);

/// Same for every supported layout. Middlebury goes to trainingH, ETH3D to
/// two_view_training(_gt), SceneFlow to the clean pass with one frame per id.
void write_dataset_tree(Dataset dataset, const std::filesystem::path& root,
                        const std::vector<StereoSample>& samples);

}  // namespace stereobench
