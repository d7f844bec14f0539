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

// Classical cost aggregation: 4D -> 3D group reduction, box filtering and
// semi-global matching.

#pragma once

#include <span>

#include "stereobench/types.hpp"

namespace stereobench {

/// Penalties are in the units of the volume being aggregated. The defaults
/// suit the per-channel-normalised census volumes produced by the feature
/// and cost modules, where one flipped bit of a 5x5 census moves the cost by
/// 1/12.
struct SgmConfig {
  float p1 = 0.25f;
  float p2 = 1.0f;
  int paths = 8;  // 4 or 8

  void validate() const;
  bool operator==(const SgmConfig&) const = default;
};

/// Collapses a 4D volume to 3D: cost groups are averaged, concat halves are
/// turned into a mean absolute difference over their channels, and volumes
/// holding both get the sum of the two terms. Single-group volumes are
/// copied. Throws kInvalidArgument when a group carries no role.
CostVolume reduce_groups(const CostVolume& v);

/// Per-disparity mean over (2r + 1)^2 windows with edge replication.
CostVolume box_aggregate(const CostVolume& v, int radius);

struct PathDirection {
  int dy;
  int dx;
  bool operator==(const PathDirection&) const = default;
};

/// Path directions in summation order: the first four are the horizontal
/// and vertical scanlines, the last four the diagonals.
std::span<const PathDirection> sgm_directions(int paths);

/// Aggregated cost L_r along one direction (traversal moves by (dy, dx)):
///   L_r(p, d) = C(p, d) + min(L_r(q, d), L_r(q, d +- 1) + P1,
///                             min_k L_r(q, k) + P2) - min_k L_r(q, k)
/// with q = p - r. Accumulated in double, stored as float.
CostVolume sgm_path(const CostVolume& v, PathDirection dir, float p1, float p2);

/// Sum of sgm_path over cfg.paths directions, added in the fixed order of
/// sgm_directions() so the result does not depend on `threads`.
CostVolume sgm_aggregate(const CostVolume& v, const SgmConfig& cfg,
                         int threads = 1);

}  // namespace stereobench
