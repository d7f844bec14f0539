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

// Disparity regression from aggregated 3D volumes.

#pragma once

#include <optional>
#include <string_view>

#include "stereobench/types.hpp"

namespace stereobench {

enum class RegressionKind { kWta, kSoftArgmin, kWtaParabola };

std::string_view regression_kind_name(RegressionKind k);
std::optional<RegressionKind> parse_regression_kind(std::string_view s);

struct RegressionConfig {
  RegressionKind kind = RegressionKind::kWtaParabola;
  float temperature = 1.0f;  // soft_argmin only
  bool upsample_to_full = true;

  void validate() const;
  bool operator==(const RegressionConfig&) const = default;
};

/// Index of the lowest cost per pixel; ties resolve to the smallest d.
DisparityMap wta(const CostVolume& v);

/// Expectation of d under softmax(-cost / t) over the disparity axis,
/// max-subtracted for stability. Output lies in [0, D - 1].
DisparityMap soft_argmin(const CostVolume& v, float temperature = 1.0f);

/// Refines integer minima with the vertex of the parabola through
/// (d - 1, d, d + 1). Offsets are clamped to [-0.5, 0.5]; boundary minima and
/// flat neighbourhoods are left unrefined.
DisparityMap parabola_subpixel(const CostVolume& v, const DisparityMap& d_wta);

/// Sub-pixel offset for costs (c_minus, c0, c_plus) around a minimum.
float parabola_offset(float c_minus, float c0, float c_plus);

/// Bilinear upsampling by `scale` with values multiplied by `scale`; the
/// validity mask is upsampled by nearest neighbour.
DisparityMap upsample_disparity(const DisparityMap& d, int scale);

/// Runs the configured regression (without upsampling).
DisparityMap regress(const CostVolume& v, const RegressionConfig& cfg);

}  // namespace stereobench
