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

// Post-regression refinement: left-right consistency, median smoothing and
// background-favouring hole filling.

#pragma once

#include <optional>
#include <string_view>

#include "stereobench/types.hpp"

namespace stereobench {

enum class FillMode { kNone, kNearestValidRow };

std::string_view fill_mode_name(FillMode f);
std::optional<FillMode> parse_fill_mode(std::string_view s);

struct RefineConfig {
  bool lr_check = true;
  float lr_threshold = 1.0f;  // pixels
  int median_radius = 0;
  FillMode fill = FillMode::kNone;

  void validate() const;
  bool operator==(const RefineConfig&) const = default;
};

/// Invalidates left pixels whose disparity disagrees by more than
/// `threshold` with the right-view disparity at x - round(d), or whose
/// match falls outside the image. Values are never modified.
DisparityMap lr_check(const DisparityMap& d_left, const DisparityMap& d_right,
                      float threshold);

/// Median over valid pixels in each (2r + 1)^2 window; the lower median is
/// taken for even counts so outputs are always input values. Pixels with no
/// valid neighbour stay invalid.
DisparityMap median_filter(const DisparityMap& d, int radius);

/// Fills each invalid pixel with the smaller of the nearest valid values to
/// its left and right in the same row. Rows without valid pixels are kept.
DisparityMap fill_holes(const DisparityMap& d);

}  // namespace stereobench
