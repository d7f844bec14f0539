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

#include "stereobench/pipeline.hpp"

#include <array>
#include <string>

#include "stereobench/error.hpp"

namespace stereobench {

namespace {

constexpr std::array<std::string_view, 4> kMethodNames = {"none", "box", "sgm", "box_sgm"};

Image mirror(const Image& img) {
  Image out(img.height(), img.width(), img.channels(), img.value_range());
  for (int y = 0; y < img.height(); ++y)
    for (int x = 0; x < img.width(); ++x)
      for (int c = 0; c < img.channels(); ++c)
        out.at(y, x, c) = img.at(y, img.width() - 1 - x, c);
  return out;
}

DisparityMap mirror(const DisparityMap& d) {
  DisparityMap out(d.height(), d.width(), 0.0f, false);
  for (int y = 0; y < d.height(); ++y)
    for (int x = 0; x < d.width(); ++x) {
      const int sx = d.width() - 1 - x;
      out.at(y, x) = d.at(y, sx);
      out.set_valid(y, x, d.valid(y, sx));
    }
  return out;
}

// Crops the upsampled map back to the input size (feature maps round up).
DisparityMap to_full(const DisparityMap& d, int scale, int height, int width) {
  const DisparityMap up = upsample_disparity(d, scale);
  if (up.height() == height && up.width() == width) return up;
  DisparityMap out(height, width, 0.0f, false);
  for (int y = 0; y < height; ++y)
    for (int x = 0; x < width; ++x) {
      out.at(y, x) = up.at(y, x);
      out.set_valid(y, x, up.valid(y, x));
    }
  return out;
}

}  // namespace

std::string_view aggregate_method_name(AggregateMethod m) {
  return kMethodNames[static_cast<std::size_t>(m)];
}

std::optional<AggregateMethod> parse_aggregate_method(std::string_view s) {
  for (std::size_t i = 0; i < kMethodNames.size(); ++i)
    if (kMethodNames[i] == s) return static_cast<AggregateMethod>(i);
  return std::nullopt;
}

void AggregateConfig::validate() const {
  if ((method == AggregateMethod::kBox || method == AggregateMethod::kBoxSgm) && box_radius < 0)
    raise(ErrorCode::kInvalidArgument, "box_radius must be non-negative");
  if (method == AggregateMethod::kSgm || method == AggregateMethod::kBoxSgm) sgm.validate();
}

void PipelineConfig::validate() const {
  feature.validate();
  cost.validate(feature.output_channels());
  aggregate.validate();
  regress.validate();
  refine.validate();
}

DisparityMap estimate_raw(const Image& left, const Image& right, const PipelineConfig& cfg,
                          int threads) {
  if (left.height() != right.height() || left.width() != right.width() ||
      left.channels() != right.channels())
    raise(ErrorCode::kShapeMismatch, "left and right views differ in shape");
  const FeatureMap fl = extract(left, cfg.feature);
  const FeatureMap fr = extract(right, cfg.feature);
  CostVolume v = build_volume(fl, fr, cfg.cost);
  if (v.groups() > 1) v = reduce_groups(v);
  const AggregateMethod m = cfg.aggregate.method;
  if (m == AggregateMethod::kBox || m == AggregateMethod::kBoxSgm)
    v = box_aggregate(v, cfg.aggregate.box_radius);
  if (m == AggregateMethod::kSgm || m == AggregateMethod::kBoxSgm)
    v = sgm_aggregate(v, cfg.aggregate.sgm, threads);
  return regress(v, cfg.regress);
}

DisparityMap estimate_disparity(const Image& left, const Image& right, const PipelineConfig& cfg,
                                int threads) {
  cfg.validate();
  const int scale = cfg.feature.scale;
  const bool up = cfg.regress.upsample_to_full && scale > 1;
  auto finish = [&](const DisparityMap& d) {
    return up ? to_full(d, scale, left.height(), left.width()) : d;
  };
  DisparityMap d = finish(estimate_raw(left, right, cfg, threads));
  if (cfg.refine.lr_check) {
    const DisparityMap dr = mirror(finish(estimate_raw(mirror(right), mirror(left), cfg, threads)));
    // Without upsampling the check runs at feature resolution, so the
    // threshold is converted to feature pixels.
    const float tau = up || scale == 1 ? cfg.refine.lr_threshold
                                       : cfg.refine.lr_threshold / static_cast<float>(scale);
    d = lr_check(d, dr, tau);
  }
  if (cfg.refine.median_radius > 0) d = median_filter(d, cfg.refine.median_radius);
  if (cfg.refine.fill == FillMode::kNearestValidRow) d = fill_holes(d);
  return d;
}

}  // namespace stereobench
