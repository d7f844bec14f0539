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

#include "stereobench/disparity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "stereobench/error.hpp"
#include "stereobench/resample.hpp"

namespace stereobench {

namespace {

void require_3d(const CostVolume& v) {
  if (v.groups() != 1)
    raise(ErrorCode::kInvalidArgument,
          "disparity regression needs a 3D volume; call reduce_groups first");
}

}  // namespace

std::string_view regression_kind_name(RegressionKind k) {
  switch (k) {
    case RegressionKind::kWta: return "wta";
    case RegressionKind::kSoftArgmin: return "soft_argmin";
    case RegressionKind::kWtaParabola: return "wta_parabola";
  }
  return "unknown";
}

std::optional<RegressionKind> parse_regression_kind(std::string_view s) {
  for (RegressionKind k : {RegressionKind::kWta, RegressionKind::kSoftArgmin,
                           RegressionKind::kWtaParabola})
    if (s == regression_kind_name(k)) return k;
  return std::nullopt;
}

void RegressionConfig::validate() const {
  if (!(temperature > 0.0f) || !std::isfinite(temperature))
    raise(ErrorCode::kConfig, "regress.temperature must be > 0");
}

DisparityMap wta(const CostVolume& v) {
  require_3d(v);
  DisparityMap out(v.height(), v.width());
  for (int y = 0; y < v.height(); ++y)
    for (int x = 0; x < v.width(); ++x) {
      int best = 0;
      float best_cost = v.at(0, y, x);
      for (int d = 1; d < v.disparities(); ++d) {
        const float c = v.at(d, y, x);
        if (c < best_cost) {
          best_cost = c;
          best = d;
        }
      }
      out.at(y, x) = static_cast<float>(best);
    }
  return out;
}

DisparityMap soft_argmin(const CostVolume& v, float temperature) {
  require_3d(v);
  if (!(temperature > 0.0f) || !std::isfinite(temperature))
    raise(ErrorCode::kInvalidArgument, "soft_argmin temperature must be > 0");
  const int nd = v.disparities();
  DisparityMap out(v.height(), v.width());
  std::vector<double> logits(nd);
  for (int y = 0; y < v.height(); ++y)
    for (int x = 0; x < v.width(); ++x) {
      double hi = -std::numeric_limits<double>::infinity();
      for (int d = 0; d < nd; ++d) {
        logits[d] = -static_cast<double>(v.at(d, y, x)) / temperature;
        hi = std::max(hi, logits[d]);
      }
      double z = 0.0;
      double num = 0.0;
      for (int d = 0; d < nd; ++d) {
        const double p = std::exp(logits[d] - hi);
        z += p;
        num += p * d;
      }
      const double est = num / z;
      out.at(y, x) = static_cast<float>(std::clamp(est, 0.0, nd - 1.0));
    }
  return out;
}

float parabola_offset(float c_minus, float c0, float c_plus) {
  const double denom = 2.0 * (static_cast<double>(c_minus) - 2.0 * c0 + c_plus);
  if (denom == 0.0) return 0.0f;
  const double off = (static_cast<double>(c_minus) - c_plus) / denom;
  return static_cast<float>(std::clamp(off, -0.5, 0.5));
}

DisparityMap parabola_subpixel(const CostVolume& v, const DisparityMap& d_wta) {
  require_3d(v);
  if (d_wta.height() != v.height() || d_wta.width() != v.width())
    raise(ErrorCode::kShapeMismatch, "parabola_subpixel: map and volume differ in size");
  DisparityMap out = d_wta;
  const int nd = v.disparities();
  for (int y = 0; y < v.height(); ++y)
    for (int x = 0; x < v.width(); ++x) {
      if (!d_wta.valid(y, x)) continue;
      const int d = static_cast<int>(std::lround(d_wta.at(y, x)));
      if (d <= 0 || d >= nd - 1) continue;
      out.at(y, x) = static_cast<float>(d) +
                     parabola_offset(v.at(d - 1, y, x), v.at(d, y, x), v.at(d + 1, y, x));
    }
  return out;
}

DisparityMap upsample_disparity(const DisparityMap& d, int scale) {
  if (scale < 1) raise(ErrorCode::kInvalidArgument, "upsample scale must be >= 1");
  if (scale == 1) return d;
  return resize_disparity(d, d.height() * scale, d.width() * scale,
                          static_cast<float>(scale));
}

DisparityMap regress(const CostVolume& v, const RegressionConfig& cfg) {
  cfg.validate();
  switch (cfg.kind) {
    case RegressionKind::kWta: return wta(v);
    case RegressionKind::kSoftArgmin: return soft_argmin(v, cfg.temperature);
    case RegressionKind::kWtaParabola: return parabola_subpixel(v, wta(v));
  }
  raise(ErrorCode::kConfig, "unknown regression kind");
}

}  // namespace stereobench
