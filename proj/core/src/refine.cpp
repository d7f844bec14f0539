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

#include "stereobench/refine.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "stereobench/error.hpp"

namespace stereobench {

std::string_view fill_mode_name(FillMode f) {
  return f == FillMode::kNone ? "none" : "nearest_valid_row";
}

std::optional<FillMode> parse_fill_mode(std::string_view s) {
  if (s == "none") return FillMode::kNone;
  if (s == "nearest_valid_row") return FillMode::kNearestValidRow;
  return std::nullopt;
}

void RefineConfig::validate() const {
  if (!(lr_threshold > 0.0f)) raise(ErrorCode::kConfig, "refine.lr_threshold must be > 0");
  if (median_radius < 0) raise(ErrorCode::kConfig, "refine.median_radius must be >= 0");
}

DisparityMap lr_check(const DisparityMap& d_left, const DisparityMap& d_right,
                      float threshold) {
  if (d_left.height() != d_right.height() || d_left.width() != d_right.width())
    raise(ErrorCode::kShapeMismatch, "lr_check: left and right maps differ in size");
  if (!(threshold > 0.0f)) raise(ErrorCode::kInvalidArgument, "lr_check threshold must be > 0");
  DisparityMap out = d_left;
  const int w = d_left.width();
  for (int y = 0; y < d_left.height(); ++y)
    for (int x = 0; x < w; ++x) {
      if (!d_left.valid(y, x)) continue;
      const double dl = d_left.at(y, x);
      const long xr = std::lround(x - dl);
      const bool ok = xr >= 0 && xr < w && d_right.valid(y, static_cast<int>(xr)) &&
                      std::fabs(dl - d_right.at(y, static_cast<int>(xr))) <= threshold;
      if (!ok) out.set_valid(y, x, false);
    }
  return out;
}

DisparityMap median_filter(const DisparityMap& d, int radius) {
  if (radius < 0) raise(ErrorCode::kInvalidArgument, "median radius must be >= 0");
  if (radius == 0) return d;
  DisparityMap out = d;
  std::vector<float> window;
  window.reserve(static_cast<std::size_t>(2 * radius + 1) * (2 * radius + 1));
  for (int y = 0; y < d.height(); ++y)
    for (int x = 0; x < d.width(); ++x) {
      window.clear();
      for (int yy = std::max(0, y - radius); yy <= std::min(d.height() - 1, y + radius); ++yy)
        for (int xx = std::max(0, x - radius); xx <= std::min(d.width() - 1, x + radius); ++xx)
          if (d.valid(yy, xx)) window.push_back(d.at(yy, xx));
      if (window.empty()) {
        out.set_valid(y, x, false);
        continue;
      }
      auto mid = window.begin() + (window.size() - 1) / 2;
      std::nth_element(window.begin(), mid, window.end());
      out.at(y, x) = *mid;
      out.set_valid(y, x, true);
    }
  return out;
}

DisparityMap fill_holes(const DisparityMap& d) {
  DisparityMap out = d;
  const int w = d.width();
  std::vector<int> left_valid(w), right_valid(w);
  for (int y = 0; y < d.height(); ++y) {
    int last = -1;
    for (int x = 0; x < w; ++x) {
      if (d.valid(y, x)) last = x;
      left_valid[x] = last;
    }
    last = -1;
    for (int x = w - 1; x >= 0; --x) {
      if (d.valid(y, x)) last = x;
      right_valid[x] = last;
    }
    for (int x = 0; x < w; ++x) {
      if (d.valid(y, x)) continue;
      const int l = left_valid[x];
      const int r = right_valid[x];
      if (l < 0 && r < 0) continue;
      float v;
      if (l < 0)
        v = d.at(y, r);
      else if (r < 0)
        v = d.at(y, l);
      else
        v = std::min(d.at(y, l), d.at(y, r));
      out.at(y, x) = v;
      out.set_valid(y, x, true);
    }
  }
  return out;
}

}  // namespace stereobench
