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

#include "stereobench/types.hpp"

#include <algorithm>
#include <string>

#include "stereobench/error.hpp"

namespace stereobench {

namespace {

void check_image_dims(int height, int width, int channels) {
  if (height < 1 || width < 1)
    raise(ErrorCode::kInvalidArgument, "image dimensions must be >= 1, got " +
                                           std::to_string(height) + "x" +
                                           std::to_string(width));
  if (channels != 1 && channels != 3)
    raise(ErrorCode::kInvalidArgument,
          "image channels must be 1 or 3, got " + std::to_string(channels));
}

}  // namespace

Image::Image(int height, int width, int channels, ValueRange range)
    : height_(height), width_(width), channels_(channels), range_(range) {
  check_image_dims(height, width, channels);
  data_.assign(static_cast<std::size_t>(height) * width * channels, 0.0f);
}

Image::Image(int height, int width, int channels, std::vector<float> data,
             ValueRange range)
    : height_(height),
      width_(width),
      channels_(channels),
      range_(range),
      data_(std::move(data)) {
  check_image_dims(height, width, channels);
  if (data_.size() != static_cast<std::size_t>(height) * width * channels)
    raise(ErrorCode::kShapeMismatch,
          "image data length " + std::to_string(data_.size()) +
              " does not match " + std::to_string(height) + "x" +
              std::to_string(width) + "x" + std::to_string(channels));
}

FeatureMap::FeatureMap(int channels, int height, int width, int scale)
    : channels_(channels), height_(height), width_(width), scale_(scale) {
  if (channels < 1 || height < 1 || width < 1)
    raise(ErrorCode::kInvalidArgument, "feature map dimensions must be >= 1");
  if (scale != 1 && scale != 2 && scale != 4)
    raise(ErrorCode::kInvalidArgument,
          "feature scale must be 1, 2 or 4, got " + std::to_string(scale));
  data_.assign(static_cast<std::size_t>(channels) * height * width, 0.0f);
}

void FeatureMap::set_scale(int scale) {
  if (scale != 1 && scale != 2 && scale != 4)
    raise(ErrorCode::kInvalidArgument,
          "feature scale must be 1, 2 or 4, got " + std::to_string(scale));
  scale_ = scale;
}

void CostVolume::set_roles(std::vector<GroupRole> roles) {
  if (roles.size() != static_cast<std::size_t>(groups_))
    raise(ErrorCode::kShapeMismatch, "role count " +
                                         std::to_string(roles.size()) +
                                         " != groups " + std::to_string(groups_));
  roles_ = std::move(roles);
}

CostVolume allocate_volume(int groups, int disparities, int height, int width,
                           std::size_t cap_bytes) {
  if (groups < 1 || disparities < 1 || height < 1 || width < 1)
    raise(ErrorCode::kInvalidArgument,
          "volume dimensions must all be >= 1");
  // Checked in floating point so absurd sizes cannot wrap.
  const long double bytes = static_cast<long double>(groups) * disparities *
                            height * width * sizeof(float);
  if (bytes > static_cast<long double>(cap_bytes))
    raise(ErrorCode::kCapacity,
          "volume " + std::to_string(groups) + "x" +
              std::to_string(disparities) + "x" + std::to_string(height) +
              "x" + std::to_string(width) + " needs " +
              std::to_string(static_cast<unsigned long long>(bytes)) +
              " bytes, cap is " + std::to_string(cap_bytes));
  CostVolume v;
  v.groups_ = groups;
  v.disparities_ = disparities;
  v.height_ = height;
  v.width_ = width;
  v.roles_.assign(groups, groups == 1 ? GroupRole::kCost
                                      : GroupRole::kUnspecified);
  v.data_.assign(static_cast<std::size_t>(groups) * disparities * height *
                     width,
                 0.0f);
  return v;
}

CostSlice volume_slice(const CostVolume& v, int d) {
  if (d < 0 || d >= v.disparities())
    raise(ErrorCode::kIndex, "disparity index " + std::to_string(d) +
                                 " outside [0, " +
                                 std::to_string(v.disparities()) + ")");
  return CostSlice(v, d);
}

std::size_t ValidMask::count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(bits_.begin(), bits_.end(), [](auto b) { return b != 0; }));
}

}  // namespace stereobench
