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

// Cost-volume constructions over left/right feature maps. Every volume obeys
// the minimize convention: similarity-style entries are stored negated.
//
// Not built: the interlaced layout, which interleaves left and right feature
// channels as [fl_0, fr_0, fl_1, fr_1, ...] per disparity and relies on a
// learned 2D aggregator to make sense of them. It has no classical reducer,
// so a config naming it is rejected with an explanatory error.

#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "stereobench/types.hpp"

namespace stereobench {

enum class CostKind { kDifference, kCorrelation, kConcat, kGroupwise, kCombined };

std::string_view cost_kind_name(CostKind k);
std::optional<CostKind> parse_cost_kind(std::string_view s);

struct CostConfig {
  CostKind kind = CostKind::kGroupwise;
  int max_disparity = 48;  // at feature scale
  int groups = 8;          // groupwise and combined
  int cat_channels = 0;    // combined: leading channels fed to the concat part
  OutOfRange out_of_range = OutOfRange::kZeroFill;
  std::size_t memory_cap_bytes = kDefaultVolumeCapBytes;

  /// Throws kConfig; `feature_channels` enables the divisibility checks.
  void validate(std::optional<int> feature_channels = std::nullopt) const;

  bool operator==(const CostConfig&) const = default;
};

/// cost(d, y, x) = mean_c |fl(c, y, x) - fr(c, y, x - d)|.
CostVolume build_difference(const FeatureMap& left, const FeatureMap& right,
                            const CostConfig& cfg);

/// cost(d, y, x) = -mean_c fl(c, y, x) * fr(c, y, x - d).
CostVolume build_correlation(const FeatureMap& left, const FeatureMap& right,
                             const CostConfig& cfg);

/// One negated correlation plane per channel block of size N_c / G, scaled
/// by G / N_c so the group mean equals build_correlation.
CostVolume build_groupwise(const FeatureMap& left, const FeatureMap& right,
                           const CostConfig& cfg);

/// 2 * N_c raw planes: left features, then right features sampled at x - d.
CostVolume build_concat(const FeatureMap& left, const FeatureMap& right,
                        const CostConfig& cfg);

/// build_groupwise over all channels followed by build_concat over the first
/// cfg.cat_channels channels; G + 2 * C planes.
CostVolume build_combined(const FeatureMap& left, const FeatureMap& right,
                          const CostConfig& cfg);

/// Dispatches on cfg.kind.
CostVolume build_volume(const FeatureMap& left, const FeatureMap& right,
                        const CostConfig& cfg);

}  // namespace stereobench
