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
#include <limits>
#include <random>

#include "stereobench/types.hpp"
#include "test_util.hpp"

namespace stereobench {
namespace {

using testing::same_bits;

TEST(AllocateVolume, SmallVolumeIsZeroInitialized) {
  const CostVolume v = allocate_volume(1, 4, 2, 2);
  EXPECT_EQ(v.size(), 16u);
  EXPECT_EQ(v.groups(), 1);
  EXPECT_EQ(v.disparities(), 4);
  for (float c : v.data()) EXPECT_EQ(c, 0.0f);
}

TEST(AllocateVolume, QuarterResolutionGroupwiseShape) {
  // 544x960 input at quarter resolution with eight groups and 48 disparities.
  const CostVolume v = allocate_volume(8, 48, 136, 240);
  EXPECT_EQ(v.groups(), 8);
  EXPECT_EQ(v.disparities(), 48);
  EXPECT_EQ(v.height(), 136);
  EXPECT_EQ(v.width(), 240);
  EXPECT_EQ(v.size(), std::size_t{8} * 48 * 136 * 240);
  EXPECT_EQ(v.roles().size(), 8u);
}

TEST(AllocateVolume, SingleCell) {
  const CostVolume v = allocate_volume(1, 1, 1, 1);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v.at(0, 0, 0), 0.0f);
  EXPECT_EQ(v.roles()[0], GroupRole::kCost);
}

TEST(AllocateVolume, RejectsNonPositiveDims) {
  EXPECT_ERROR_CODE(allocate_volume(0, 4, 2, 2), ErrorCode::kInvalidArgument);
  EXPECT_ERROR_CODE(allocate_volume(1, 0, 2, 2), ErrorCode::kInvalidArgument);
  EXPECT_ERROR_CODE(allocate_volume(1, 4, -1, 2), ErrorCode::kInvalidArgument);
}

TEST(AllocateVolume, CapacityErrorBeyondCap) {
  EXPECT_ERROR_CODE(allocate_volume(1, 4, 2, 2, 63), ErrorCode::kCapacity);
  EXPECT_NO_THROW(allocate_volume(1, 4, 2, 2, 64));
  // 8 x 192 x 1088 x 1920 x 4 bytes is about 12 GiB, over the default cap.
  EXPECT_ERROR_CODE(allocate_volume(8, 192, 1088, 1920), ErrorCode::kCapacity);
}

TEST(VolumeSlice, ZeroVolumeSliceIsZero) {
  const CostVolume v = allocate_volume(2, 3, 4, 5);
  const CostSlice s = volume_slice(v, 0);
  for (int g = 0; g < 2; ++g)
    for (float c : s.plane(g)) EXPECT_EQ(c, 0.0f);
}

TEST(VolumeSlice, OutOfRangeIndex) {
  const CostVolume v = allocate_volume(1, 3, 2, 2);
  EXPECT_ERROR_CODE(volume_slice(v, 3), ErrorCode::kIndex);
  EXPECT_ERROR_CODE(volume_slice(v, -1), ErrorCode::kIndex);
}

TEST(VolumeSlice, ConstantPlaneAfterFillWithDisparity) {
  CostVolume v = allocate_volume(3, 6, 4, 5);
  for (int g = 0; g < 3; ++g)
    for (int d = 0; d < 6; ++d)
      for (int y = 0; y < 4; ++y)
        for (int x = 0; x < 5; ++x) v.at(g, d, y, x) = static_cast<float>(d);
  for (int d = 0; d < 6; ++d) {
    const CostSlice s = volume_slice(v, d);
    EXPECT_EQ(s.disparity(), d);
    for (int g = 0; g < 3; ++g) {
      for (float c : s.plane(g)) EXPECT_EQ(c, static_cast<float>(d));
      for (int y = 0; y < 4; ++y)
        for (int x = 0; x < 5; ++x) EXPECT_EQ(s.at(g, y, x), static_cast<float>(d));
    }
  }
}

TEST(CostVolume, WriteReadRoundTripIsBitExact) {
  std::mt19937 gen(11);
  std::uniform_int_distribution<std::uint32_t> bits;
  CostVolume v = allocate_volume(2, 5, 3, 7);
  std::vector<float> written;
  for (std::size_t i = 0; i < v.size(); ++i) {
    float x;
    do {
      x = std::bit_cast<float>(bits(gen));
    } while (!std::isfinite(x));
    written.push_back(x);
  }
  std::size_t k = 0;
  for (int g = 0; g < 2; ++g)
    for (int d = 0; d < 5; ++d)
      for (int y = 0; y < 3; ++y)
        for (int x = 0; x < 7; ++x) v.at(g, d, y, x) = written[k++];
  k = 0;
  for (int g = 0; g < 2; ++g)
    for (int d = 0; d < 5; ++d)
      for (int y = 0; y < 3; ++y)
        for (int x = 0; x < 7; ++x) EXPECT_TRUE(same_bits(v.at(g, d, y, x), written[k++]));
}

TEST(CostVolume, RolesMustMatchGroups) {
  CostVolume v = allocate_volume(2, 1, 1, 1);
  EXPECT_EQ(v.roles()[0], GroupRole::kUnspecified);
  EXPECT_ERROR_CODE(v.set_roles({GroupRole::kCost}), ErrorCode::kShapeMismatch);
  v.set_roles({GroupRole::kCost, GroupRole::kCost});
  EXPECT_EQ(v.roles()[1], GroupRole::kCost);
}

TEST(Image, InvariantsEnforced) {
  EXPECT_ERROR_CODE(Image(0, 3, 1), ErrorCode::kInvalidArgument);
  EXPECT_ERROR_CODE(Image(2, 3, 2), ErrorCode::kInvalidArgument);
  EXPECT_ERROR_CODE(Image(2, 2, 1, std::vector<float>(3)), ErrorCode::kShapeMismatch);
  Image img(2, 3, 3);
  EXPECT_EQ(img.data().size(), 18u);
  img.at(1, 2, 2) = 7.0f;
  EXPECT_EQ(img.data()[17], 7.0f);
}

TEST(FeatureMap, ScaleMustBeOneTwoOrFour) {
  EXPECT_ERROR_CODE(FeatureMap(1, 2, 2, 3), ErrorCode::kInvalidArgument);
  EXPECT_ERROR_CODE(FeatureMap(0, 2, 2, 1), ErrorCode::kInvalidArgument);
  FeatureMap f(2, 3, 4, 4);
  f.at(1, 2, 3) = 1.5f;
  EXPECT_EQ(f.plane(1)[11], 1.5f);
}

TEST(ValidMask, CountsSetBits) {
  ValidMask m(3, 3, false);
  m.set(0, 0, true);
  m.set(2, 1, true);
  EXPECT_EQ(m.count(), 2u);
  EXPECT_TRUE(m(2, 1));
  EXPECT_FALSE(m(1, 1));
}

}  // namespace
}  // namespace stereobench
