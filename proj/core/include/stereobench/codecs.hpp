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

// Codecs for the on-disk formats used by the benchmark datasets: PFM float
// maps, PNG (8/16 bit, incl. the KITTI disparity convention) and binary
// PGM/PPM. All codecs are pure functions over byte buffers.

#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "stereobench/types.hpp"

namespace stereobench {

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;

/// Interleaved float array as stored in a PFM file (channels 1 or 3).
struct FloatArray {
  int height = 0;
  int width = 0;
  int channels = 1;
  std::vector<float> data;

  float at(int y, int x, int c = 0) const {
    return data[(static_cast<std::size_t>(y) * width + x) * channels + c];
  }
  bool operator==(const FloatArray&) const = default;
};

struct PfmData {
  FloatArray array;
  float scale = 1.0f;  // absolute value of the header scale
};

/// Decodes a PFM buffer. Scanlines on disk run bottom-to-top and are flipped
/// so the result has a top-left origin.
PfmData read_pfm(ByteView bytes);

/// Encodes `a` as PFM; rejects non-finite values. `scale` is written with the
/// sign that encodes `little_endian`.
Bytes write_pfm(const FloatArray& a, bool little_endian = true,
                float scale = 1.0f);

/// Integer raster decoded from PNG/PGM/PPM. Samples are interleaved.
struct Raster {
  int height = 0;
  int width = 0;
  int channels = 1;
  int bit_depth = 8;  // 8 or 16
  std::vector<std::uint16_t> samples;

  std::uint16_t at(int y, int x, int c = 0) const {
    return samples[(static_cast<std::size_t>(y) * width + x) * channels + c];
  }
  bool operator==(const Raster&) const = default;
};

/// Decodes any PNG to 1 or 3 channels: palettes are expanded, alpha is
/// dropped, sub-byte gray is widened to 8 bit. `bit_depth` keeps 16 when the
/// file is 16 bit.
Raster read_png(ByteView bytes);

/// Encodes a 1- or 3-channel raster; output bytes are deterministic.
Bytes write_png(const Raster& r);

/// KITTI disparity PNG: 16-bit gray, disparity = value / 256, 0 = invalid.
DisparityMap read_kitti_disparity_png(ByteView bytes);
Bytes write_kitti_disparity_png(const DisparityMap& d);

/// Binary PGM (P5) / PPM (P6), maxval up to 65535.
Raster read_pnm(ByteView bytes);
Bytes write_pnm(const Raster& r);

Bytes read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, ByteView bytes);

/// Loads a camera image (PNG, PGM/PPM or 1/3-channel PFM) as float [0, 255].
/// 16-bit sources are rescaled to [0, 255].
Image load_image(const std::filesystem::path& path);

/// Loads a disparity map: *.png uses the KITTI convention, *.pfm marks
/// non-finite values invalid.
DisparityMap load_disparity(const std::filesystem::path& path);

/// Saves by extension (*.png KITTI convention, *.pfm little-endian float;
/// invalid pixels become +inf in PFM).
void save_disparity(const std::filesystem::path& path, const DisparityMap& d);

/// Loads an occlusion mask PNG; pixels equal to 255 are non-occluded.
ValidMask load_nonoccluded_mask(const std::filesystem::path& path);

}  // namespace stereobench
