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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "stereobench/aggregation.hpp"
#include "stereobench/cost_volume.hpp"
#include "stereobench/disparity.hpp"
#include "test_util.hpp"

namespace stereobench {
namespace {

using testing::random_features;

// Right features such that fr(c, y, x - delta) = fl(c, y, x); columns with no
// source get fresh noise.
FeatureMap shift_right(const FeatureMap& fl, int delta, std::mt19937& gen) {
  std::uniform_real_distribution<float> dist(-1.0f, 1.0f);
  FeatureMap fr(fl.channels(), fl.height(), fl.width(), fl.scale());
  for (int c = 0; c < fl.channels(); ++c)
    for (int y = 0; y < fl.height(); ++y)
      for (int x = 0; x < fl.width(); ++x)
        fr.at(c, y, x) = x + delta < fl.width() ? fl.at(c, y, x + delta) : dist(gen);
  return fr;
}

FeatureMap from_values(int c, int h, int w, std::initializer_list<float> v) {
  FeatureMap f(c, h, w);
  std::copy(v.begin(), v.end(), f.data().begin());
  return f;
}

CostConfig config(CostKind kind, int d, int groups = 1) {
  CostConfig cfg;
  cfg.kind = kind;
  cfg.max_disparity = d;
  cfg.groups = groups;
  return cfg;
}

TEST(Difference, ZeroAtTrueShift) {
  std::mt19937 gen(1);
  const FeatureMap fl = random_features(6, 5, 20, gen);
  const FeatureMap fr = shift_right(fl, 3, gen);
  const CostVolume v = build_difference(fl, fr, config(CostKind::kDifference, 8));
  EXPECT_EQ(v.groups(), 1);
  for (int y = 0; y < 5; ++y)
    for (int x = 3; x < 17; ++x) EXPECT_EQ(v.at(3, y, x), 0.0f);
}

TEST(Difference, MeanAbsoluteDifference) {
  // Channel-major: channel 0 = [0, 1], channel 1 = [0, 2] over two columns.
  const FeatureMap fl = from_values(2, 1, 2, {0, 1, 0, 2});
  const FeatureMap fr = from_values(2, 1, 2, {0, 0, 0, 0});
  const CostVolume v = build_difference(fl, fr, config(CostKind::kDifference, 2));
  EXPECT_FLOAT_EQ(v.at(1, 0, 1), 1.5f);
}

TEST(Difference, ZeroFillMatchesAgainstZeroVector) {
  std::mt19937 gen(2);
  const FeatureMap fl = random_features(4, 3, 6, gen);
  const FeatureMap fr = random_features(4, 3, 6, gen);
  const CostVolume v = build_difference(fl, fr, config(CostKind::kDifference, 4));
  for (int y = 0; y < 3; ++y)
    for (int d = 1; d < 4; ++d)
      for (int x = 0; x < d; ++x) {
        double s = 0.0;
        for (int c = 0; c < 4; ++c) s += std::abs(fl.at(c, y, x));
        EXPECT_NEAR(v.at(d, y, x), s / 4.0, 1e-6);
      }
}

TEST(Difference, ArgminRecoversPlanarShift) {
  std::mt19937 gen(3);
  const FeatureMap fl = random_features(8, 6, 40, gen);
  for (int delta = 0; delta < 8; ++delta) {
    const FeatureMap fr = shift_right(fl, delta, gen);
    const DisparityMap d = wta(build_difference(fl, fr, config(CostKind::kDifference, 12)));
    for (int y = 0; y < 6; ++y)
      for (int x = 12; x < 40 - 12; ++x) ASSERT_EQ(d.at(y, x), static_cast<float>(delta));
  }
}

TEST(Correlation, NegatedMeanProduct) {
  const FeatureMap f = from_values(2, 1, 1, {1, 2});
  const CostVolume v = build_correlation(f, f, config(CostKind::kCorrelation, 1));
  EXPECT_FLOAT_EQ(v.at(0, 0, 0), -2.5f);
}

TEST(Correlation, OrthogonalFeaturesGiveZero) {
  const FeatureMap a = from_values(2, 1, 1, {1, 0});
  const FeatureMap b = from_values(2, 1, 1, {0, 1});
  EXPECT_EQ(build_correlation(a, b, config(CostKind::kCorrelation, 1)).at(0, 0, 0), 0.0f);
}

TEST(Groupwise, SingleGroupEqualsCorrelationBitExactly) {
  std::mt19937 gen(4);
  const FeatureMap fl = random_features(12, 7, 15, gen);
  const FeatureMap fr = random_features(12, 7, 15, gen);
  for (OutOfRange o : {OutOfRange::kZeroFill, OutOfRange::kMaxCost}) {
    CostConfig cg = config(CostKind::kGroupwise, 6, 1), cc = config(CostKind::kCorrelation, 6);
    cg.out_of_range = cc.out_of_range = o;
    const CostVolume g = build_groupwise(fl, fr, cg);
    const CostVolume c = build_correlation(fl, fr, cc);
    ASSERT_EQ(g.size(), c.size());
    for (std::size_t i = 0; i < g.size(); ++i) ASSERT_TRUE(testing::same_bits(g.data()[i], c.data()[i]));
  }
}

TEST(Groupwise, GroupMeanEqualsCorrelation) {
  std::mt19937 gen(5);
  const FeatureMap fl = random_features(16, 6, 12, gen);
  const FeatureMap fr = random_features(16, 6, 12, gen);
  const CostVolume c = build_correlation(fl, fr, config(CostKind::kCorrelation, 5));
  for (int groups : {2, 4, 8, 16}) {
    const CostVolume g = build_groupwise(fl, fr, config(CostKind::kGroupwise, 5, groups));
    for (int d = 0; d < 5; ++d)
      for (int y = 0; y < 6; ++y)
        for (int x = 0; x < 12; ++x) {
          double mean = 0.0;
          for (int k = 0; k < groups; ++k) mean += g.at(k, d, y, x);
          ASSERT_NEAR(mean / groups, c.at(d, y, x), 1e-6);
        }
  }
}

TEST(Groupwise, OnesGiveUnitSimilarityPerGroup) {
  const FeatureMap f = from_values(4, 1, 1, {1, 1, 1, 1});
  const CostVolume v = build_groupwise(f, f, config(CostKind::kGroupwise, 1, 2));
  EXPECT_FLOAT_EQ(v.at(0, 0, 0, 0), -1.0f);
  EXPECT_FLOAT_EQ(v.at(1, 0, 0, 0), -1.0f);
}

TEST(Groupwise, QuarterResolutionShape) {
  std::mt19937 gen(6);
  const FeatureMap fl = random_features(8, 136, 240, gen);
  const CostVolume v = build_groupwise(fl, fl, config(CostKind::kGroupwise, 48, 8));
  EXPECT_EQ(v.groups(), 8);
  EXPECT_EQ(v.disparities(), 48);
  EXPECT_EQ(v.height(), 136);
  EXPECT_EQ(v.width(), 240);
}

TEST(Groupwise, IndivisibleChannelsRejected) {
  std::mt19937 gen(7);
  const FeatureMap f = random_features(6, 2, 2, gen);
  EXPECT_ERROR_CODE(build_groupwise(f, f, config(CostKind::kGroupwise, 2, 4)),
                    ErrorCode::kInvalidArgument);
}

TEST(Concat, LayoutAndShift) {
  std::mt19937 gen(8);
  const int n = 3, delta = 2;
  const FeatureMap fl = random_features(n, 4, 9, gen);
  const FeatureMap fr = random_features(n, 4, 9, gen);
  const CostVolume v = build_concat(fl, fr, config(CostKind::kConcat, 4));
  ASSERT_EQ(v.groups(), 2 * n);
  for (int g = 0; g < n; ++g) {
    EXPECT_EQ(v.roles()[g], GroupRole::kConcatLeft);
    EXPECT_EQ(v.roles()[n + g], GroupRole::kConcatRight);
  }
  for (int c = 0; c < n; ++c)
    for (int y = 0; y < 4; ++y)
      for (int x = 0; x < 9; ++x) {
        for (int d = 0; d < 4; ++d) ASSERT_EQ(v.at(c, d, y, x), fl.at(c, y, x));
        ASSERT_EQ(v.at(n + c, delta, y, x), x >= delta ? fr.at(c, y, x - delta) : 0.0f);
      }
}

TEST(Combined, GroupAxisCountsGroupsPlusTwiceCat) {
  std::mt19937 gen(9);
  const FeatureMap f = random_features(32, 3, 5, gen);
  CostConfig cfg = config(CostKind::kCombined, 3, 8);
  cfg.cat_channels = 16;
  EXPECT_EQ(build_combined(f, f, cfg).groups(), 40);
}

TEST(Combined, NoCatEqualsGroupwise) {
  std::mt19937 gen(10);
  const FeatureMap fl = random_features(8, 3, 6, gen), fr = random_features(8, 3, 6, gen);
  CostConfig cfg = config(CostKind::kCombined, 3, 4);
  EXPECT_EQ(build_combined(fl, fr, cfg).data().size(), build_groupwise(fl, fr, cfg).data().size());
  const CostVolume a = build_combined(fl, fr, cfg), b = build_groupwise(fl, fr, cfg);
  EXPECT_TRUE(std::equal(a.data().begin(), a.data().end(), b.data().begin()));
  cfg.groups = 1;
  const CostVolume c = build_combined(fl, fr, cfg);
  const CostVolume corr = build_correlation(fl, fr, cfg);
  EXPECT_TRUE(std::equal(c.data().begin(), c.data().end(), corr.data().begin()));
}

TEST(Combined, CatChannelsBounded) {
  std::mt19937 gen(11);
  const FeatureMap f = random_features(4, 2, 2, gen);
  CostConfig cfg = config(CostKind::kCombined, 1, 2);
  cfg.cat_channels = 5;
  EXPECT_ERROR_CODE(build_combined(f, f, cfg), ErrorCode::kInvalidArgument);
}

TEST(OutOfRange, MaxCostIsGlobalInRangeMaximumPlusOne) {
  std::mt19937 gen(12);
  const FeatureMap fl = random_features(4, 3, 8, gen), fr = random_features(4, 3, 8, gen);
  CostConfig cfg = config(CostKind::kDifference, 5);
  cfg.out_of_range = OutOfRange::kMaxCost;
  const CostVolume v = build_difference(fl, fr, cfg);
  float in_max = -INFINITY;
  for (int d = 0; d < 5; ++d)
    for (int y = 0; y < 3; ++y)
      for (int x = d; x < 8; ++x) in_max = std::max(in_max, v.at(d, y, x));
  for (int d = 1; d < 5; ++d)
    for (int y = 0; y < 3; ++y)
      for (int x = 0; x < d; ++x) EXPECT_EQ(v.at(d, y, x), in_max + 1.0f);
}

TEST(Difference, NoiseNeverLowersCostAtTruth) {
  std::mt19937 gen(13);
  std::normal_distribution<float> noise(0.0f, 0.3f);
  int increased = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const FeatureMap fl = random_features(4, 4, 16, gen);
    const FeatureMap fr = shift_right(fl, 2, gen);
    FeatureMap noisy = fr;
    for (float& v : noisy.data()) v += noise(gen);
    const CostConfig cfg = config(CostKind::kDifference, 3);
    const CostVolume clean = build_difference(fl, fr, cfg), dirty = build_difference(fl, noisy, cfg);
    double a = 0.0, b = 0.0;
    for (int y = 0; y < 4; ++y)
      for (int x = 2; x < 14; ++x) {
        a += clean.at(2, y, x);
        b += dirty.at(2, y, x);
      }
    increased += b >= a;
  }
  EXPECT_GE(increased, 95);
}

TEST(BuildVolume, ShapeMismatchRejected) {
  std::mt19937 gen(14);
  const FeatureMap a = random_features(4, 3, 5, gen), b = random_features(4, 3, 6, gen);
  EXPECT_ERROR_CODE(build_volume(a, b, config(CostKind::kDifference, 2)), ErrorCode::kShapeMismatch);
}

TEST(BuildVolume, EveryConstructionRecoversShiftAfterReduction) {
  // Signed-bit features, as census produces, make every similarity peak at
  // the true shift.
  std::mt19937 gen(15);
  FeatureMap fl = random_features(32, 4, 32, gen);
  for (float& v : fl.data()) v = v < 0.0f ? -1.0f : 1.0f;
  for (int delta : {0, 3, 7}) {
    const FeatureMap fr = shift_right(fl, delta, gen);
    for (CostKind k : {CostKind::kDifference, CostKind::kCorrelation, CostKind::kGroupwise,
                       CostKind::kConcat, CostKind::kCombined}) {
      CostConfig cfg = config(k, 10, 4);
      cfg.cat_channels = k == CostKind::kCombined ? 4 : 0;
      CostVolume v = build_volume(fl, fr, cfg);
      if (v.groups() > 1) v = reduce_groups(v);
      const DisparityMap d = wta(v);
      for (int y = 0; y < 4; ++y)
        for (int x = 10; x < 32 - 10; ++x)
          ASSERT_EQ(d.at(y, x), static_cast<float>(delta))
              << cost_kind_name(k) << " delta " << delta;
    }
  }
}

TEST(CostConfig, Validation) {
  CostConfig cfg = config(CostKind::kGroupwise, 48, 5);
  EXPECT_ERROR_CODE(cfg.validate(24), ErrorCode::kConfig);
  cfg.groups = 4;
  EXPECT_NO_THROW(cfg.validate(24));
  cfg.max_disparity = 0;
  EXPECT_ERROR_CODE(cfg.validate(), ErrorCode::kConfig);
}

TEST(CostKindNames, InterlacedIsNotAKind) {
  EXPECT_EQ(parse_cost_kind("gwc"), CostKind::kGroupwise);
  EXPECT_EQ(parse_cost_kind("groupwise"), CostKind::kGroupwise);
  EXPECT_FALSE(parse_cost_kind("interlaced"));
}

}  // namespace
}  // namespace stereobench
