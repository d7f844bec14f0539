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

#include "stereobench/aggregation.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <thread>
#include <vector>

#include "stereobench/error.hpp"

namespace stereobench {

namespace {

constexpr std::array<PathDirection, 8> kDirections = {{
    {0, 1}, {0, -1}, {1, 0}, {-1, 0}, {1, 1}, {1, -1}, {-1, 1}, {-1, -1},
}};

void require_3d(const CostVolume& v, const char* op) {
  if (v.groups() != 1)
    raise(ErrorCode::kInvalidArgument,
          std::string(op) + " needs a 3D volume; call reduce_groups first");
}

void require_finite(const CostVolume& v) {
  for (float c : v.data())
    if (!std::isfinite(c))
      raise(ErrorCode::kNonFinite, "cost volume contains non-finite entries");
}

CostVolume like(const CostVolume& v, int groups) {
  CostVolume out = allocate_volume(groups, v.disparities(), v.height(),
                                   v.width(), std::numeric_limits<std::size_t>::max());
  out.set_out_of_range(v.out_of_range());
  if (groups == 1) out.set_roles({GroupRole::kCost});
  return out;
}

void apply_max_cost_3d(CostVolume& v) {
  float hi = -std::numeric_limits<float>::infinity();
  for (int d = 0; d < v.disparities(); ++d)
    for (int y = 0; y < v.height(); ++y)
      for (int x = std::min(d, v.width()); x < v.width(); ++x)
        hi = std::max(hi, v.at(d, y, x));
  if (!std::isfinite(hi)) hi = 0.0f;
  for (int d = 0; d < v.disparities(); ++d)
    for (int y = 0; y < v.height(); ++y)
      for (int x = 0; x < std::min(d, v.width()); ++x) v.at(d, y, x) = hi + 1.0f;
}

}  // namespace

void SgmConfig::validate() const {
  if (!(p1 >= 0.0f)) raise(ErrorCode::kConfig, "sgm.p1 must be >= 0");
  if (!(p2 >= p1)) raise(ErrorCode::kConfig, "sgm.p2 must be >= sgm.p1");
  if (paths != 4 && paths != 8) raise(ErrorCode::kConfig, "sgm.paths must be 4 or 8");
}

CostVolume reduce_groups(const CostVolume& v) {
  if (v.groups() == 1) return v;
  std::vector<int> cost, left, right;
  for (int g = 0; g < v.groups(); ++g) {
    switch (v.roles()[g]) {
      case GroupRole::kCost: cost.push_back(g); break;
      case GroupRole::kConcatLeft: left.push_back(g); break;
      case GroupRole::kConcatRight: right.push_back(g); break;
      case GroupRole::kUnspecified:
        raise(ErrorCode::kInvalidArgument,
              "reduce_groups: group " + std::to_string(g) + " has no semantics tag");
    }
  }
  if (left.size() != right.size())
    raise(ErrorCode::kInvalidArgument,
          "reduce_groups: concat halves differ in size");

  CostVolume out = like(v, 1);
  const std::size_t plane = v.plane_size();
  std::vector<double> acc(plane);
  for (int d = 0; d < v.disparities(); ++d) {
    std::fill(acc.begin(), acc.end(), 0.0);
    auto slice = volume_slice(v, d);
    if (!cost.empty()) {
      for (int g : cost) {
        auto p = slice.plane(g);
        for (std::size_t i = 0; i < plane; ++i) acc[i] += p[i];
      }
      for (double& a : acc) a /= static_cast<double>(cost.size());
    }
    if (!left.empty()) {
      std::vector<double> l1(plane, 0.0);
      for (std::size_t k = 0; k < left.size(); ++k) {
        auto lp = slice.plane(left[k]);
        auto rp = slice.plane(right[k]);
        for (std::size_t i = 0; i < plane; ++i)
          l1[i] += std::fabs(static_cast<double>(lp[i]) - rp[i]);
      }
      for (std::size_t i = 0; i < plane; ++i)
        acc[i] += l1[i] / static_cast<double>(left.size());
    }
    auto dst = out.data().subspan(static_cast<std::size_t>(d) * plane, plane);
    for (std::size_t i = 0; i < plane; ++i) dst[i] = static_cast<float>(acc[i]);
  }
  if (v.out_of_range() == OutOfRange::kMaxCost) apply_max_cost_3d(out);
  return out;
}

CostVolume box_aggregate(const CostVolume& v, int radius) {
  require_3d(v, "box_aggregate");
  if (radius < 0) raise(ErrorCode::kInvalidArgument, "box radius must be >= 0");
  if (radius == 0) return v;
  const int h = v.height();
  const int w = v.width();
  const int ph = h + 2 * radius;
  const int pw = w + 2 * radius;
  CostVolume out = like(v, 1);
  // Summed-area table over the edge-replicated plane.
  std::vector<double> sat(static_cast<std::size_t>(ph + 1) * (pw + 1));
  const double norm = 1.0 / ((2.0 * radius + 1) * (2.0 * radius + 1));
  for (int d = 0; d < v.disparities(); ++d) {
    for (int y = 0; y < ph; ++y) {
      const int sy = std::clamp(y - radius, 0, h - 1);
      double row = 0.0;
      for (int x = 0; x < pw; ++x) {
        row += v.at(d, sy, std::clamp(x - radius, 0, w - 1));
        sat[static_cast<std::size_t>(y + 1) * (pw + 1) + x + 1] =
            sat[static_cast<std::size_t>(y) * (pw + 1) + x + 1] + row;
      }
    }
    const int k = 2 * radius + 1;
    for (int y = 0; y < h; ++y)
      for (int x = 0; x < w; ++x) {
        auto s = [&](int yy, int xx) {
          return sat[static_cast<std::size_t>(yy) * (pw + 1) + xx];
        };
        const double sum = s(y + k, x + k) - s(y, x + k) - s(y + k, x) + s(y, x);
        out.at(d, y, x) = static_cast<float>(sum * norm);
      }
  }
  return out;
}

std::span<const PathDirection> sgm_directions(int paths) {
  if (paths != 4 && paths != 8)
    raise(ErrorCode::kInvalidArgument, "SGM paths must be 4 or 8");
  return std::span<const PathDirection>(kDirections.data(),
                                        static_cast<std::size_t>(paths));
}

CostVolume sgm_path(const CostVolume& v, PathDirection dir, float p1, float p2) {
  require_3d(v, "sgm_path");
  if ((dir.dy == 0 && dir.dx == 0) || std::abs(dir.dy) > 1 || std::abs(dir.dx) > 1)
    raise(ErrorCode::kInvalidArgument, "SGM direction components must be in {-1, 0, 1}");
  const int h = v.height();
  const int w = v.width();
  const int nd = v.disparities();
  const double P1 = p1;
  const double P2 = p2;
  CostVolume out = like(v, 1);

  // Row buffers of L (w x nd) and their per-pixel minima. For horizontal
  // paths the predecessor lives in the current row.
  std::vector<double> prev(static_cast<std::size_t>(w) * nd);
  std::vector<double> cur(prev.size());
  std::vector<double> prev_min(w), cur_min(w);

  const int y0 = dir.dy >= 0 ? 0 : h - 1;
  const int ystep = dir.dy >= 0 ? 1 : -1;
  const int x0 = dir.dx >= 0 ? 0 : w - 1;
  const int xstep = dir.dx >= 0 ? 1 : -1;

  for (int yi = 0, y = y0; yi < h; ++yi, y += ystep) {
    for (int xi = 0, x = x0; xi < w; ++xi, x += xstep) {
      const int qy = y - dir.dy;
      const int qx = x - dir.dx;
      double* L = cur.data() + static_cast<std::size_t>(x) * nd;
      double m = std::numeric_limits<double>::infinity();
      if (qy < 0 || qy >= h || qx < 0 || qx >= w) {
        for (int d = 0; d < nd; ++d) {
          L[d] = v.at(d, y, x);
          m = std::min(m, L[d]);
        }
      } else {
        const bool same_row = dir.dy == 0;
        const double* Lq = (same_row ? cur.data() : prev.data()) +
                           static_cast<std::size_t>(qx) * nd;
        const double mq = same_row ? cur_min[qx] : prev_min[qx];
        for (int d = 0; d < nd; ++d) {
          double best = std::min(Lq[d], mq + P2);
          if (d > 0) best = std::min(best, Lq[d - 1] + P1);
          if (d + 1 < nd) best = std::min(best, Lq[d + 1] + P1);
          // best >= mq always; subtracting first keeps P1 = P2 = 0 exact.
          L[d] = v.at(d, y, x) + (best - mq);
          m = std::min(m, L[d]);
        }
      }
      cur_min[x] = m;
      for (int d = 0; d < nd; ++d) out.at(d, y, x) = static_cast<float>(L[d]);
    }
    std::swap(prev, cur);
    std::swap(prev_min, cur_min);
  }
  return out;
}

CostVolume sgm_aggregate(const CostVolume& v, const SgmConfig& cfg, int threads) {
  require_3d(v, "sgm_aggregate");
  cfg.validate();
  require_finite(v);
  const auto dirs = sgm_directions(cfg.paths);
  const std::size_t n = v.size();
  std::vector<double> acc(n, 0.0);
  const int batch = std::clamp(threads, 1, static_cast<int>(dirs.size()));

  for (std::size_t start = 0; start < dirs.size(); start += batch) {
    const std::size_t end = std::min(dirs.size(), start + batch);
    std::vector<CostVolume> paths(end - start);
    if (batch == 1) {
      paths[0] = sgm_path(v, dirs[start], cfg.p1, cfg.p2);
    } else {
      std::vector<std::thread> workers;
      for (std::size_t i = start; i < end; ++i)
        workers.emplace_back([&, i] {
          paths[i - start] = sgm_path(v, dirs[i], cfg.p1, cfg.p2);
        });
      for (auto& t : workers) t.join();
    }
    for (const CostVolume& p : paths) {
      auto src = p.data();
      for (std::size_t i = 0; i < n; ++i) acc[i] += src[i];
    }
  }
  CostVolume out = like(v, 1);
  auto dst = out.data();
  for (std::size_t i = 0; i < n; ++i) dst[i] = static_cast<float>(acc[i]);
  return out;
}

}  // namespace stereobench
