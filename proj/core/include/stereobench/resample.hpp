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

// Resampling helpers shared by dataset loading, feature extraction,
// augmentation and disparity upsampling. Bilinear sampling uses pixel-centre
// alignment: output x maps to input (x + 0.5) * in / out - 0.5.

#pragma once

#include "stereobench/types.hpp"

namespace stereobench {

/// s x s box average; output dims are ceil(dim / s). Partial edge blocks
/// average the pixels they cover.
Image area_downsample(const Image& img, int s);

/// Area average of valid disparities, divided by s. A block is valid when it
/// contains at least one valid pixel.
DisparityMap area_downsample_disparity(const DisparityMap& d, int s);

/// A block is set only when every covered pixel is set.
ValidMask area_downsample_mask(const ValidMask& m, int s);

Image resize_bilinear(const Image& img, int out_height, int out_width);

/// Bilinear over valid neighbours (weights renormalised), values multiplied
/// by `value_scale`; validity is taken from the nearest source pixel.
DisparityMap resize_disparity(const DisparityMap& d, int out_height,
                              int out_width, float value_scale);

ValidMask resize_mask_nearest(const ValidMask& m, int out_height,
                              int out_width);

}  // namespace stereobench
