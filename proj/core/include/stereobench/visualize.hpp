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

#include <array>
#include <cstdint>
#include <vector>

#include "stereobench/codecs.hpp"
#include "stereobench/types.hpp"

namespace stereobench {

/// Turbo-style colormap at t in [0, 1] (clamped), as 8-bit RGB.
std::array<std::uint8_t, 3> turbo(float t);

/// Maps [0, range] through the colormap; invalid pixels are black.
Raster colorize(const DisparityMap& d, float range);

/// PNG bytes of colorize().
std::vector<std::uint8_t> visualize(const DisparityMap& d, float range);

}  // namespace stereobench
