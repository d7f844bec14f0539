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

#include "stereobench/features.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "stereobench/error.hpp"
#include "stereobench/resample.hpp"

namespace stereobench {

namespace {

int census_bits(int window) { return window * window - 1; }
int census_words(int window) { return (census_bits(window) + 31) / 32; }

void check_census_window(int window) {
  if (window < 3 || window % 2 == 0)
    raise(ErrorCode::kInvalidArgument,
          "census window must be odd and >= 3, got " + std::to_string(window));
}

void standardize(std::span<float> plane) {
  double mean = 0.0;
  for (float v : plane) mean += v;
  mean /= static_cast<double>(plane.size());
  double var = 0.0;
  for (float v : plane) var += (v - mean) * (v - mean);
  var /= static_cast<double>(plane.size());
  if (var <= 1e-12) {
    std::fill(plane.begin(), plane.end(), 0.0f);
    return;
  }
  const double inv = 1.0 / std::sqrt(var);
  for (float& v : plane) v = static_cast<float>((v - mean) * inv);
}

}  // namespace

void FeatureConfig::validate() const {
  if (scale != 1 && scale != 2 && scale != 4)
    raise(ErrorCode::kConfig, "feature.scale must be 1, 2 or 4");
  if (kind == FeatureKind::kCensus && (window < 3 || window % 2 == 0))
    raise(ErrorCode::kConfig, "feature.window must be odd and >= 3");
  if (kind == FeatureKind::kIntensityGradient &&
      (channels < 2 || channels > 64 || channels % 2 != 0))
    raise(ErrorCode::kConfig, "feature.channels must be even and in [2, 64]");
  if (normalize_input) {
    if (mean_rgb.size() != 3 || std_rgb.size() != 3)
      raise(ErrorCode::kConfig, "feature.mean/std need 3 entries for RGB");
    if (mean_gray.size() != 1 || std_gray.size() != 1)
      raise(ErrorCode::kConfig, "feature.mean_gray/std_gray need 1 entry");
    for (float s : std_rgb)
      if (!(s > 0.0f)) raise(ErrorCode::kConfig, "feature.std must be > 0");
    if (!(std_gray[0] > 0.0f))
      raise(ErrorCode::kConfig, "feature.std_gray must be > 0");
  }
}

int FeatureConfig::output_channels() const {
  return kind == FeatureKind::kCensus ? census_bits(window) : channels;
}

Image normalize(const Image& img, std::span<const float> mean,
                std::span<const float> std) {
  const int c = img.channels();
  if (mean.size() != static_cast<std::size_t>(c) ||
      std.size() != static_cast<std::size_t>(c))
    raise(ErrorCode::kInvalidArgument,
          "normalize needs " + std::to_string(c) + " mean/std entries");
  for (float s : std)
    if (!(s > 0.0f)) raise(ErrorCode::kInvalidArgument, "normalize: std must be > 0");
  Image out(img.height(), img.width(), c, ValueRange::kNormalized);
  auto src = img.data();
  auto dst = out.data();
  for (std::size_t i = 0; i < src.size(); ++i) {
    const std::size_t ch = i % c;
    dst[i] = (src[i] / 255.0f - mean[ch]) / std[ch];
  }
  return out;
}

Image downsample(const Image& img, int s) { return area_downsample(img, s); }

Image to_luma(const Image& img) {
  if (img.channels() == 1) return img;
  Image out(img.height(), img.width(), 1, img.value_range());
  for (int y = 0; y < img.height(); ++y)
    for (int x = 0; x < img.width(); ++x)
      out.at(y, x) = 0.299f * img.at(y, x, 0) + 0.587f * img.at(y, x, 1) +
                     0.114f * img.at(y, x, 2);
  return out;
}

FeatureMap census(const Image& img, int window) {
  check_census_window(window);
  const Image gray = to_luma(img);
  const int h = gray.height();
  const int w = gray.width();
  const int r = window / 2;
  FeatureMap out(census_words(window), h, w, 1);
  std::vector<std::uint32_t> words(census_words(window));
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      std::fill(words.begin(), words.end(), 0u);
      const float center = gray.at(y, x);
      int bit = 0;
      for (int dy = -r; dy <= r; ++dy) {
        const int yy = std::clamp(y + dy, 0, h - 1);
        for (int dx = -r; dx <= r; ++dx) {
          if (dy == 0 && dx == 0) continue;
          const int xx = std::clamp(x + dx, 0, w - 1);
          if (gray.at(yy, xx) < center) words[bit / 32] |= 1u << (bit % 32);
          ++bit;
        }
      }
      for (std::size_t k = 0; k < words.size(); ++k)
        out.at(static_cast<int>(k), y, x) = std::bit_cast<float>(words[k]);
    }
  return out;
}

std::uint32_t census_word(const FeatureMap& packed, int word, int y, int x) {
  return std::bit_cast<std::uint32_t>(packed.at(word, y, x));
}

FeatureMap census_signed_bits(const FeatureMap& packed, int window) {
  check_census_window(window);
  if (packed.channels() != census_words(window))
    raise(ErrorCode::kShapeMismatch, "packed census word count does not match window");
  const int bits = census_bits(window);
  FeatureMap out(bits, packed.height(), packed.width(), packed.scale());
  for (int b = 0; b < bits; ++b) {
    auto dst = out.plane(b);
    auto src = packed.plane(b / 32);
    const std::uint32_t m = 1u << (b % 32);
    for (std::size_t i = 0; i < dst.size(); ++i)
      dst[i] = (std::bit_cast<std::uint32_t>(src[i]) & m) ? 1.0f : -1.0f;
  }
  return out;
}

FeatureMap intensity_gradient(const Image& img, int channels) {
  if (channels < 2 || channels > 64 || channels % 2 != 0)
    raise(ErrorCode::kInvalidArgument,
          "intensity_gradient channels must be even and in [2, 64], got " +
              std::to_string(channels));
  const Image gray = to_luma(img);
  const int h = gray.height();
  const int w = gray.width();
  FeatureMap out(channels, h, w, 1);
  const int bins = std::max(0, channels - 3);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      const float l = gray.at(y, x);
      const float dx = gray.at(y, std::min(x + 1, w - 1)) - l;
      const float dy = gray.at(std::min(y + 1, h - 1), x) - l;
      out.at(0, y, x) = l;
      out.at(1, y, x) = std::fabs(dx);
      if (channels > 2) out.at(2, y, x) = std::fabs(dy);
      if (bins > 0 && (dx != 0.0f || dy != 0.0f)) {
        double theta = std::atan2(static_cast<double>(dy), static_cast<double>(dx));
        if (theta < 0.0) theta += std::numbers::pi;
        if (theta >= std::numbers::pi) theta -= std::numbers::pi;
        const int b = std::min(static_cast<int>(theta / std::numbers::pi * bins), bins - 1);
        out.at(3 + b, y, x) = std::sqrt(dx * dx + dy * dy);
      }
    }
  for (int c = 0; c < channels; ++c) standardize(out.plane(c));
  return out;
}

FeatureMap extract(const Image& img, const FeatureConfig& cfg) {
  cfg.validate();
  Image src = img;
  if (cfg.normalize_input) {
    const bool gray = img.channels() == 1;
    src = normalize(img, gray ? cfg.mean_gray : cfg.mean_rgb,
                    gray ? cfg.std_gray : cfg.std_rgb);
  }
  src = downsample(src, cfg.scale);
  FeatureMap out = cfg.kind == FeatureKind::kCensus
                       ? census_signed_bits(census(src, cfg.window), cfg.window)
                       : intensity_gradient(src, cfg.channels);
  out.set_scale(cfg.scale);
  return out;
}

}  // namespace stereobench
