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

// Hand-crafted descriptors standing in for a learned feature backbone.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "stereobench/types.hpp"

namespace stereobench {

enum class FeatureKind { kCensus, kIntensityGradient };

struct FeatureConfig {
  FeatureKind kind = FeatureKind::kCensus;
  int window = 5;    // census, odd and >= 3
  int channels = 16; // intensity_gradient, even in [2, 64]
  int scale = 4;     // divisor of the source resolution: 1, 2 or 4
  bool normalize_input = false;
  // ImageNet statistics; grayscale inputs use the 1-element variants.
  std::vector<float> mean_rgb{0.485f, 0.456f, 0.406f};
  std::vector<float> std_rgb{0.229f, 0.224f, 0.225f};
  std::vector<float> mean_gray{0.449f};
  std::vector<float> std_gray{0.226f};

  /// Throws kConfig on violated invariants.
  void validate() const;
  /// Channel count of extract() output for this config.
  int output_channels() const;

  bool operator==(const FeatureConfig&) const = default;
};

/// out = (in / 255 - mean) / std per channel.
Image normalize(const Image& img, std::span<const float> mean,
                std::span<const float> std);

/// s x s area averaging, s in {1, 2, 4}; output dims ceil(dim / s).
Image downsample(const Image& img, int s);

/// ITU-R BT.601 luma for RGB input, copy for grayscale.
Image to_luma(const Image& img);

/// Census transform with edge replication. Bit k (raster order over the
/// window, centre skipped) is 1 iff that neighbour is strictly smaller than
/// the centre. Bits are packed LSB-first into ceil((w*w - 1) / 32) 32-bit
/// words whose bit patterns are carried in the float channels; read them
/// back with census_word().
FeatureMap census(const Image& img, int window);

std::uint32_t census_word(const FeatureMap& packed, int word, int y, int x);

/// Expands packed census codes into w*w - 1 channels of +1 (bit set) or -1.
/// Correlation of these channels is an affine function of Hamming distance.
FeatureMap census_signed_bits(const FeatureMap& packed, int window);

/// Channels [luma, |dx|, |dy|, orientation bins of gradient magnitude ...]
/// truncated to `channels`, each standardized to zero mean and unit variance
/// over the image (constant channels become zero). Gradients are forward
/// differences with edge replication.
FeatureMap intensity_gradient(const Image& img, int channels);

/// normalize (optional) -> downsample -> descriptor. Census output is the
/// signed-bit expansion so every cost construction can consume it.
FeatureMap extract(const Image& img, const FeatureConfig& cfg);

}  // namespace stereobench
