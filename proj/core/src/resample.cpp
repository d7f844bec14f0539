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

#include "stereobench/resample.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "stereobench/error.hpp"

namespace stereobench {

namespace {

void check_factor(int s) {
  if (s != 1 && s != 2 && s != 4)
    raise(ErrorCode::kInvalidArgument,
          "downsample factor must be 1, 2 or 4, got " + std::to_string(s));
}

int ceil_div(int a, int b) { return (a + b - 1) / b; }

// Source coordinate and interpolation weight for one output index.
struct Tap {
  int i0;
  int i1;
  float w1;
};

Tap tap(int out_index, int in_size, int out_size) {
  const double ratio = static_cast<double>(in_size) / out_size;
  double src = (out_index + 0.5) * ratio - 0.5;
  src = std::clamp(src, 0.0, static_cast<double>(in_size - 1));
  const int i0 = static_cast<int>(std::floor(src));
  const int i1 = std::min(i0 + 1, in_size - 1);
  return {i0, i1, static_cast<float>(src - i0)};
}

int nearest(int out_index, int in_size, int out_size) {
  const double ratio = static_cast<double>(in_size) / out_size;
  const double src = (out_index + 0.5) * ratio - 0.5;
  // Round half up so exact 2x upsampling picks a deterministic neighbour.
  const int i = static_cast<int>(std::floor(src + 0.5));
  return std::clamp(i, 0, in_size - 1);
}

void check_out_dims(int h, int w) {
  if (h < 1 || w < 1)
    raise(ErrorCode::kInvalidArgument, "resampled dimensions must be >= 1");
}

}  // namespace

Image area_downsample(const Image& img, int s) {
  check_factor(s);
  if (s == 1) return img;
  const int oh = ceil_div(img.height(), s);
  const int ow = ceil_div(img.width(), s);
  const int c = img.channels();
  Image out(oh, ow, c, img.value_range());
  for (int y = 0; y < oh; ++y)
    for (int x = 0; x < ow; ++x) {
      const int y1 = std::min((y + 1) * s, img.height());
      const int x1 = std::min((x + 1) * s, img.width());
      for (int ch = 0; ch < c; ++ch) {
        double sum = 0.0;
        for (int yy = y * s; yy < y1; ++yy)
          for (int xx = x * s; xx < x1; ++xx) sum += img.at(yy, xx, ch);
        out.at(y, x, ch) =
            static_cast<float>(sum / ((y1 - y * s) * (x1 - x * s)));
      }
    }
  return out;
}

DisparityMap area_downsample_disparity(const DisparityMap& d, int s) {
  check_factor(s);
  if (s == 1) return d;
  const int oh = ceil_div(d.height(), s);
  const int ow = ceil_div(d.width(), s);
  DisparityMap out(oh, ow, 0.0f, false);
  for (int y = 0; y < oh; ++y)
    for (int x = 0; x < ow; ++x) {
      double sum = 0.0;
      int n = 0;
      for (int yy = y * s; yy < std::min((y + 1) * s, d.height()); ++yy)
        for (int xx = x * s; xx < std::min((x + 1) * s, d.width()); ++xx)
          if (d.valid(yy, xx)) {
            sum += d.at(yy, xx);
            ++n;
          }
      if (n == 0) continue;
      out.at(y, x) = static_cast<float>(sum / n / s);
      out.set_valid(y, x, true);
    }
  return out;
}

ValidMask area_downsample_mask(const ValidMask& m, int s) {
  check_factor(s);
  if (s == 1) return m;
  const int oh = ceil_div(m.height(), s);
  const int ow = ceil_div(m.width(), s);
  ValidMask out(oh, ow, true);
  for (int y = 0; y < m.height(); ++y)
    for (int x = 0; x < m.width(); ++x)
      if (!m(y, x)) out.set(y / s, x / s, false);
  return out;
}

Image resize_bilinear(const Image& img, int out_height, int out_width) {
  check_out_dims(out_height, out_width);
  if (out_height == img.height() && out_width == img.width()) return img;
  Image out(out_height, out_width, img.channels(), img.value_range());
  std::vector<Tap> xt(out_width);
  for (int x = 0; x < out_width; ++x) xt[x] = tap(x, img.width(), out_width);
  for (int y = 0; y < out_height; ++y) {
    const Tap ty = tap(y, img.height(), out_height);
    for (int x = 0; x < out_width; ++x) {
      const Tap& tx = xt[x];
      for (int c = 0; c < img.channels(); ++c) {
        const float top = img.at(ty.i0, tx.i0, c) * (1.0f - tx.w1) +
                          img.at(ty.i0, tx.i1, c) * tx.w1;
        const float bot = img.at(ty.i1, tx.i0, c) * (1.0f - tx.w1) +
                          img.at(ty.i1, tx.i1, c) * tx.w1;
        out.at(y, x, c) = top * (1.0f - ty.w1) + bot * ty.w1;
      }
    }
  }
  return out;
}

DisparityMap resize_disparity(const DisparityMap& d, int out_height,
                              int out_width, float value_scale) {
  check_out_dims(out_height, out_width);
  DisparityMap out(out_height, out_width, 0.0f, false);
  out.set_negative_disparity(d.has_negative_disparity());
  std::vector<Tap> xt(out_width);
  std::vector<int> xn(out_width);
  for (int x = 0; x < out_width; ++x) {
    xt[x] = tap(x, d.width(), out_width);
    xn[x] = nearest(x, d.width(), out_width);
  }
  for (int y = 0; y < out_height; ++y) {
    const Tap ty = tap(y, d.height(), out_height);
    const int yn = nearest(y, d.height(), out_height);
    for (int x = 0; x < out_width; ++x) {
      if (!d.valid(yn, xn[x])) continue;
      const Tap& tx = xt[x];
      const int ys[2] = {ty.i0, ty.i1};
      const int xs[2] = {tx.i0, tx.i1};
      const float wy[2] = {1.0f - ty.w1, ty.w1};
      const float wx[2] = {1.0f - tx.w1, tx.w1};
      float sum = 0.0f;
      float wsum = 0.0f;
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
          const float w = wy[a] * wx[b];
          if (w <= 0.0f || !d.valid(ys[a], xs[b])) continue;
          sum += w * d.at(ys[a], xs[b]);
          wsum += w;
        }
      // The nearest tap is valid, so wsum is zero only when every valid
      // tap carries zero weight; fall back to the nearest value then.
      out.at(y, x) = (wsum > 0.0f ? sum / wsum : d.at(yn, xn[x])) * value_scale;
      out.set_valid(y, x, true);
    }
  }
  return out;
}

ValidMask resize_mask_nearest(const ValidMask& m, int out_height,
                              int out_width) {
  check_out_dims(out_height, out_width);
  ValidMask out(out_height, out_width, false);
  for (int y = 0; y < out_height; ++y) {
    const int yn = nearest(y, m.height(), out_height);
    for (int x = 0; x < out_width; ++x)
      out.set(y, x, m(yn, nearest(x, m.width(), out_width)));
  }
  return out;
}

}  // namespace stereobench
