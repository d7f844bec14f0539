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

// Stereo-aware augmentations. Geometric ops keep views, disparities and
// masks mutually consistent; photometric ops never touch ground truth.
// Every random op is split into a parameter draw and a deterministic apply
// so the applied-op log can replay a result exactly.

#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "stereobench/rng.hpp"
#include "stereobench/sample.hpp"

namespace stereobench {

// --- configuration -------------------------------------------------------

struct CropStep {
  int height = 320;
  int width = 736;
  bool operator==(const CropStep&) const = default;
};

enum class FlipKind { kHorizontal, kVertical, kHorizontalSwap };

struct FlipStep {
  FlipKind kind = FlipKind::kHorizontal;
  double prob = 0.5;
  bool operator==(const FlipStep&) const = default;
};

struct ColorStep {
  double brightness = 0.2;  // factor drawn from [1 - b, 1 + b]
  double contrast = 0.2;    // factor drawn from [1 - c, 1 + c]
  double gamma_min = 0.8;
  double gamma_max = 1.2;
  bool asymmetric = true;   // independent draws for left and right
  double prob = 1.0;
  bool operator==(const ColorStep&) const = default;
};

struct EraseStep {
  double prob = 0.5;
  int max_boxes = 2;
  int min_size = 50;  // box side range in pixels
  int max_size = 100;
  bool operator==(const EraseStep&) const = default;
};

struct ScaleStep {
  double min_factor = 1.0;
  double max_factor = 1.25;
  double max_stretch = 0.0;  // s_y = s_x * 2^u, u in [-max_stretch, max_stretch]
  double prob = 0.5;
  bool operator==(const ScaleStep&) const = default;
};

using AugmentStep = std::variant<CropStep, FlipStep, ColorStep, EraseStep, ScaleStep>;

std::string augment_step_name(const AugmentStep& step);
/// Throws kConfig on out-of-range probabilities or sizes.
void validate_step(const AugmentStep& step);

/// Random crop followed by colour jitter, erasing and scaling.
std::vector<AugmentStep> rc_ces_pipeline(int crop_height = 320, int crop_width = 736);

// --- drawn parameters ----------------------------------------------------

struct CropParams {
  int y0 = 0, x0 = 0, height = 0, width = 0;
  bool operator==(const CropParams&) const = default;
};
struct FlipParams {
  FlipKind kind = FlipKind::kHorizontal;
  bool applied = false;
  bool operator==(const FlipParams&) const = default;
};
struct Photometric {
  double brightness = 1.0, contrast = 1.0, gamma = 1.0;
  bool operator==(const Photometric&) const = default;
};
struct ColorParams {
  Photometric left, right;
  bool operator==(const ColorParams&) const = default;
};
struct EraseBox {
  int y0 = 0, x0 = 0, height = 0, width = 0;
  bool operator==(const EraseBox&) const = default;
};
struct EraseParams {
  std::vector<EraseBox> boxes;
  bool operator==(const EraseParams&) const = default;
};
struct ScaleParams {
  double sx = 1.0, sy = 1.0;
  int min_height = 0, min_width = 0;
  bool operator==(const ScaleParams&) const = default;
};

using AppliedOp = std::variant<CropParams, FlipParams, ColorParams, EraseParams, ScaleParams>;

std::string describe(const AppliedOp& op);

struct AugmentedSample {
  StereoSample sample;
  std::vector<AppliedOp> applied_ops;
};

// --- operations ------------------------------------------------------------

/// Same window on every plane; throws kInvalidArgument when larger than the
/// image.
StereoSample random_crop(const StereoSample& s, int height, int width, Rng& rng);
StereoSample apply_crop(const StereoSample& s, const CropParams& p);

/// Mirrors all planes on x and negates disparities; the result is flagged as
/// carrying negative disparities (not evaluable). Applying twice restores
/// the input.
StereoSample hflip(const StereoSample& s);

/// Mirrors both views and swaps them; the right-view ground truth becomes
/// the new left ground truth. Throws kPrecondition without right-view GT.
/// The occlusion mask belongs to the old left view and is dropped.
StereoSample hsflip(const StereoSample& s);

/// Reverses row order in every plane.
StereoSample vflip(const StereoSample& s);

StereoSample color_aug(const StereoSample& s, const ColorStep& cfg, Rng& rng);
StereoSample apply_color(const StereoSample& s, const ColorParams& p);
/// brightness -> contrast about the image mean -> gamma, clamped to [0, 255].
/// Factors equal to 1 are skipped so neutral parameters are an exact identity.
Image photometric(const Image& img, const Photometric& p);

/// Fills up to cfg.max_boxes rectangles of the right view with that view's
/// mean colour.
StereoSample erase(const StereoSample& s, const EraseStep& cfg, Rng& rng);
StereoSample apply_erase(const StereoSample& s, const EraseParams& p);

/// Resamples by (s_x, s_y): bilinear views and disparities, nearest masks.
/// Disparity values are multiplied by the realised horizontal ratio
/// new_width / width, which equals s_x whenever width * s_x is integral.
/// Throws kInvalidArgument when the result is smaller than (min_height,
/// min_width).
StereoSample scale(const StereoSample& s, const ScaleStep& cfg, Rng& rng,
                   int min_height = 0, int min_width = 0);
StereoSample apply_scale(const StereoSample& s, const ScaleParams& p);

/// Applies `pipeline` in order with an Rng seeded from derive_seed(seed,
/// sample id). Scale steps use the pipeline's first crop as minimum size.
AugmentedSample compose(const std::vector<AugmentStep>& pipeline, const StereoSample& s,
                        std::uint64_t seed);

/// Re-applies a log produced by compose() without drawing random numbers.
StereoSample replay(const StereoSample& s, const std::vector<AppliedOp>& ops);

}  // namespace stereobench
