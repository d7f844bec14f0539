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

#include "stereobench/visualize.hpp"

#include <algorithm>
#include <cmath>

#include "stereobench/error.hpp"

namespace stereobench {

// Polynomial fit of the Turbo colormap (A. Mikhailov, 2019; Apache-2.0).
std::array<std::uint8_t, 3> turbo(float t) {
  const double x = std::isnan(t) ? 0.0 : std::clamp(static_cast<double>(t), 0.0, 1.0);
  const double x2 = x * x, x3 = x2 * x, x4 = x3 * x, x5 = x4 * x;
  const double r = 0.13572138 + 4.61539260 * x - 42.66032258 * x2 + 132.13108234 * x3 -
                   152.94239396 * x4 + 59.28637943 * x5;
  const double g = 0.09140261 + 2.19418839 * x + 4.84296658 * x2 - 14.18503333 * x3 +
                   4.27729857 * x4 + 2.82956604 * x5;
  const double b = 0.10667330 + 12.64194608 * x - 60.58204836 * x2 + 110.36276771 * x3 -
                   89.90310912 * x4 + 27.34824973 * x5;
  auto to8 = [](double c) {
    return static_cast<std::uint8_t>(std::lround(std::clamp(c, 0.0, 1.0) * 255.0));
  };
  return {to8(r), to8(g), to8(b)};
}

Raster colorize(const DisparityMap& d, float range) {
  if (!(range > 0.0f) || !std::isfinite(range))
    raise(ErrorCode::kInvalidArgument, "colormap range must be positive and finite");
  Raster out;
  out.height = d.height();
  out.width = d.width();
  out.channels = 3;
  out.bit_depth = 8;
  out.samples.assign(static_cast<std::size_t>(d.height()) * d.width() * 3, 0);
  for (int y = 0; y < d.height(); ++y)
    for (int x = 0; x < d.width(); ++x) {
      if (!d.valid(y, x)) continue;
      const auto c = turbo(d.at(y, x) / range);
      const std::size_t i = (static_cast<std::size_t>(y) * d.width() + x) * 3;
      std::copy(c.begin(), c.end(), out.samples.begin() + static_cast<std::ptrdiff_t>(i));
    }
  return out;
}

std::vector<std::uint8_t> visualize(const DisparityMap& d, float range) {
  return write_png(colorize(d, range));
}

}  // namespace stereobench
