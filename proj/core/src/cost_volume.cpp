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

#include "stereobench/cost_volume.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "stereobench/error.hpp"

namespace stereobench {

namespace {

void check_pair(const FeatureMap& l, const FeatureMap& r) {
  if (!l.same_shape(r))
    raise(ErrorCode::kShapeMismatch,
          "left/right features differ: " + std::to_string(l.channels()) + "x" +
              std::to_string(l.height()) + "x" + std::to_string(l.width()) +
              "@" + std::to_string(l.scale()) + " vs " +
              std::to_string(r.channels()) + "x" + std::to_string(r.height()) +
              "x" + std::to_string(r.width()) + "@" + std::to_string(r.scale()));
}

// Accumulates sum over channels [c0, c1) of op(fl, fr(x - d)) for every
// pixel of one disparity plane, in channel order. Out-of-range pixels see a
// zero right feature.
template <typename Op>
void accumulate_plane(const FeatureMap& l, const FeatureMap& r, int c0, int c1,
                      int d, std::vector<double>& acc, Op op) {
  const int h = l.height();
  const int w = l.width();
  std::fill(acc.begin(), acc.end(), 0.0);
  for (int c = c0; c < c1; ++c) {
    auto lp = l.plane(c);
    auto rp = r.plane(c);
    for (int y = 0; y < h; ++y) {
      const float* lrow = lp.data() + static_cast<std::size_t>(y) * w;
      const float* rrow = rp.data() + static_cast<std::size_t>(y) * w;
      double* arow = acc.data() + static_cast<std::size_t>(y) * w;
      const int split = std::min(d, w);
      for (int x = 0; x < split; ++x) arow[x] += op(lrow[x], 0.0f);
      for (int x = split; x < w; ++x) arow[x] += op(lrow[x], rrow[x - d]);
    }
  }
}

double product(float a, float b) {
  return static_cast<double>(a) * static_cast<double>(b);
}

double abs_diff(float a, float b) {
  return std::fabs(static_cast<double>(a) - static_cast<double>(b));
}

// Replaces out-of-range cells of the given groups with (max in-range) + 1.
void apply_max_cost(CostVolume& v, int g0, int g1) {
  float hi = -std::numeric_limits<float>::infinity();
  for (int g = g0; g < g1; ++g)
    for (int d = 0; d < v.disparities(); ++d)
      for (int y = 0; y < v.height(); ++y)
        for (int x = std::min(d, v.width()); x < v.width(); ++x)
          hi = std::max(hi, v.at(g, d, y, x));
  if (!std::isfinite(hi)) hi = 0.0f;  // no in-range cell at all
  const float fill = hi + 1.0f;
  for (int g = g0; g < g1; ++g)
    for (int d = 0; d < v.disparities(); ++d)
      for (int y = 0; y < v.height(); ++y)
        for (int x = 0; x < std::min(d, v.width()); ++x) v.at(g, d, y, x) = fill;
}

// Writes -(scale * block sum) into groups [g_offset, g_offset + groups).
void fill_groupwise(CostVolume& v, int g_offset, const FeatureMap& l,
                    const FeatureMap& r, int groups, int disparities) {
  const int block = l.channels() / groups;
  const double scale = static_cast<double>(groups) / l.channels();
  std::vector<double> acc(static_cast<std::size_t>(l.height()) * l.width());
  for (int g = 0; g < groups; ++g)
    for (int d = 0; d < disparities; ++d) {
      accumulate_plane(l, r, g * block, (g + 1) * block, d, acc, product);
      auto out = v.data().subspan(
          (static_cast<std::size_t>(g_offset + g) * disparities + d) * acc.size(),
          acc.size());
      for (std::size_t i = 0; i < acc.size(); ++i)
        out[i] = static_cast<float>(-(scale * acc[i]));
    }
}

void fill_concat(CostVolume& v, int g_offset, const FeatureMap& l,
                 const FeatureMap& r, int channels, int disparities) {
  const int h = l.height();
  const int w = l.width();
  for (int c = 0; c < channels; ++c)
    for (int d = 0; d < disparities; ++d)
      for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
          v.at(g_offset + c, d, y, x) = l.at(c, y, x);
          v.at(g_offset + channels + c, d, y, x) =
              x - d >= 0 ? r.at(c, y, x - d) : 0.0f;
        }
}

CostVolume allocate_for(const FeatureMap& l, int groups, const CostConfig& cfg) {
  CostVolume v = allocate_volume(groups, cfg.max_disparity, l.height(),
                                 l.width(), cfg.memory_cap_bytes);
  v.set_out_of_range(cfg.out_of_range);
  return v;
}

}  // namespace

std::string_view cost_kind_name(CostKind k) {
  switch (k) {
    case CostKind::kDifference: return "difference";
    case CostKind::kCorrelation: return "correlation";
    case CostKind::kConcat: return "concat";
    case CostKind::kGroupwise: return "gwc";
    case CostKind::kCombined: return "combined";
  }
  return "unknown";
}

std::optional<CostKind> parse_cost_kind(std::string_view s) {
  for (CostKind k : {CostKind::kDifference, CostKind::kCorrelation,
                     CostKind::kConcat, CostKind::kGroupwise, CostKind::kCombined})
    if (s == cost_kind_name(k)) return k;
  if (s == "groupwise") return CostKind::kGroupwise;
  return std::nullopt;
}

void CostConfig::validate(std::optional<int> feature_channels) const {
  if (max_disparity < 1) raise(ErrorCode::kConfig, "cost.max_disparity must be >= 1");
  const bool grouped = kind == CostKind::kGroupwise || kind == CostKind::kCombined;
  if (grouped && groups < 1) raise(ErrorCode::kConfig, "cost.groups must be >= 1");
  if (cat_channels < 0) raise(ErrorCode::kConfig, "cost.cat_channels must be >= 0");
  if (!feature_channels) return;
  const int n = *feature_channels;
  if (grouped && n % groups != 0)
    raise(ErrorCode::kConfig, "cost.groups = " + std::to_string(groups) +
                                  " does not divide feature channels " +
                                  std::to_string(n));
  if (kind == CostKind::kCombined && cat_channels > n)
    raise(ErrorCode::kConfig, "cost.cat_channels = " + std::to_string(cat_channels) +
                                  " exceeds feature channels " + std::to_string(n));
}

CostVolume build_difference(const FeatureMap& left, const FeatureMap& right,
                            const CostConfig& cfg) {
  check_pair(left, right);
  CostVolume v = allocate_for(left, 1, cfg);
  const double scale = 1.0 / left.channels();
  std::vector<double> acc(v.plane_size());
  for (int d = 0; d < cfg.max_disparity; ++d) {
    accumulate_plane(left, right, 0, left.channels(), d, acc, abs_diff);
    auto out = v.data().subspan(static_cast<std::size_t>(d) * acc.size(), acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i)
      out[i] = static_cast<float>(scale * acc[i]);
  }
  if (cfg.out_of_range == OutOfRange::kMaxCost) apply_max_cost(v, 0, 1);
  return v;
}

CostVolume build_correlation(const FeatureMap& left, const FeatureMap& right,
                             const CostConfig& cfg) {
  check_pair(left, right);
  CostVolume v = allocate_for(left, 1, cfg);
  const double scale = 1.0 / left.channels();
  std::vector<double> acc(v.plane_size());
  for (int d = 0; d < cfg.max_disparity; ++d) {
    accumulate_plane(left, right, 0, left.channels(), d, acc, product);
    auto out = v.data().subspan(static_cast<std::size_t>(d) * acc.size(), acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i)
      out[i] = static_cast<float>(-(scale * acc[i]));
  }
  if (cfg.out_of_range == OutOfRange::kMaxCost) apply_max_cost(v, 0, 1);
  return v;
}

CostVolume build_groupwise(const FeatureMap& left, const FeatureMap& right,
                           const CostConfig& cfg) {
  check_pair(left, right);
  if (cfg.groups < 1 || left.channels() % cfg.groups != 0)
    raise(ErrorCode::kInvalidArgument,
          "feature channels " + std::to_string(left.channels()) +
              " not divisible by groups " + std::to_string(cfg.groups));
  CostVolume v = allocate_for(left, cfg.groups, cfg);
  v.set_roles(std::vector<GroupRole>(cfg.groups, GroupRole::kCost));
  fill_groupwise(v, 0, left, right, cfg.groups, cfg.max_disparity);
  if (cfg.out_of_range == OutOfRange::kMaxCost) apply_max_cost(v, 0, cfg.groups);
  return v;
}

CostVolume build_concat(const FeatureMap& left, const FeatureMap& right,
                        const CostConfig& cfg) {
  check_pair(left, right);
  const int n = left.channels();
  CostVolume v = allocate_for(left, 2 * n, cfg);
  std::vector<GroupRole> roles(n, GroupRole::kConcatLeft);
  roles.resize(2 * n, GroupRole::kConcatRight);
  v.set_roles(std::move(roles));
  v.set_concat_channels(n);
  fill_concat(v, 0, left, right, n, cfg.max_disparity);
  return v;
}

CostVolume build_combined(const FeatureMap& left, const FeatureMap& right,
                          const CostConfig& cfg) {
  check_pair(left, right);
  const int n = left.channels();
  const int c = cfg.cat_channels;
  if (cfg.groups < 1 || n % cfg.groups != 0)
    raise(ErrorCode::kInvalidArgument,
          "feature channels " + std::to_string(n) + " not divisible by groups " +
              std::to_string(cfg.groups));
  if (c < 0 || c > n)
    raise(ErrorCode::kInvalidArgument, "cat_channels " + std::to_string(c) +
                                           " outside [0, " + std::to_string(n) + "]");
  CostVolume v = allocate_for(left, cfg.groups + 2 * c, cfg);
  std::vector<GroupRole> roles(cfg.groups, GroupRole::kCost);
  roles.resize(cfg.groups + c, GroupRole::kConcatLeft);
  roles.resize(cfg.groups + 2 * c, GroupRole::kConcatRight);
  v.set_roles(std::move(roles));
  v.set_concat_channels(c);
  fill_groupwise(v, 0, left, right, cfg.groups, cfg.max_disparity);
  if (cfg.out_of_range == OutOfRange::kMaxCost) apply_max_cost(v, 0, cfg.groups);
  if (c > 0) fill_concat(v, cfg.groups, left, right, c, cfg.max_disparity);
  return v;
}

CostVolume build_volume(const FeatureMap& left, const FeatureMap& right,
                        const CostConfig& cfg) {
  cfg.validate(left.channels());
  switch (cfg.kind) {
    case CostKind::kDifference: return build_difference(left, right, cfg);
    case CostKind::kCorrelation: return build_correlation(left, right, cfg);
    case CostKind::kConcat: return build_concat(left, right, cfg);
    case CostKind::kGroupwise: return build_groupwise(left, right, cfg);
    case CostKind::kCombined: return build_combined(left, right, cfg);
  }
  raise(ErrorCode::kConfig, "unknown cost kind");
}

}  // namespace stereobench
