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

// Shared numeric containers. All arrays are row-major with a top-left
// origin; pixel (y, x) of channel c lives at ((c * height) + y) * width + x
// for planar types and (y * width + x) * channels + c for interleaved Image.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace stereobench {

enum class ValueRange { kRaw255, kNormalized };

/// Interleaved H x W x C image, C in {1, 3}.
class Image {
 public:
  Image() = default;
  Image(int height, int width, int channels,
        ValueRange range = ValueRange::kRaw255);
  Image(int height, int width, int channels, std::vector<float> data,
        ValueRange range = ValueRange::kRaw255);

  int height() const noexcept { return height_; }
  int width() const noexcept { return width_; }
  int channels() const noexcept { return channels_; }
  ValueRange value_range() const noexcept { return range_; }
  void set_value_range(ValueRange r) noexcept { range_ = r; }
  bool empty() const noexcept { return data_.empty(); }

  float at(int y, int x, int c = 0) const {
    return data_[(static_cast<std::size_t>(y) * width_ + x) * channels_ + c];
  }
  float& at(int y, int x, int c = 0) {
    return data_[(static_cast<std::size_t>(y) * width_ + x) * channels_ + c];
  }

  std::span<const float> data() const noexcept { return data_; }
  std::span<float> data() noexcept { return data_; }

  bool operator==(const Image&) const = default;

 private:
  int height_ = 0;
  int width_ = 0;
  int channels_ = 0;
  ValueRange range_ = ValueRange::kRaw255;
  std::vector<float> data_;
};

/// Planar C x H x W descriptor array at 1/scale of the source resolution.
class FeatureMap {
 public:
  FeatureMap() = default;
  FeatureMap(int channels, int height, int width, int scale = 1);

  int channels() const noexcept { return channels_; }
  int height() const noexcept { return height_; }
  int width() const noexcept { return width_; }
  int scale() const noexcept { return scale_; }
  void set_scale(int scale);

  float at(int c, int y, int x) const { return data_[index(c, y, x)]; }
  float& at(int c, int y, int x) { return data_[index(c, y, x)]; }

  std::span<const float> plane(int c) const {
    return {data_.data() + index(c, 0, 0),
            static_cast<std::size_t>(height_) * width_};
  }
  std::span<float> plane(int c) {
    return {data_.data() + index(c, 0, 0),
            static_cast<std::size_t>(height_) * width_};
  }

  std::span<const float> data() const noexcept { return data_; }
  std::span<float> data() noexcept { return data_; }

  bool same_shape(const FeatureMap& o) const noexcept {
    return channels_ == o.channels_ && height_ == o.height_ &&
           width_ == o.width_ && scale_ == o.scale_;
  }

  bool operator==(const FeatureMap&) const = default;

 private:
  std::size_t index(int c, int y, int x) const {
    return (static_cast<std::size_t>(c) * height_ + y) * width_ + x;
  }

  int channels_ = 0;
  int height_ = 0;
  int width_ = 0;
  int scale_ = 1;
  std::vector<float> data_;
};

/// What a group plane of a 4D volume holds. reduce_groups() dispatches on it.
enum class GroupRole : std::uint8_t {
  kUnspecified,
  kCost,          // lower-is-better plane (difference, negated correlation)
  kConcatLeft,    // raw left feature channel
  kConcatRight,   // raw right feature channel sampled at x - d
};

enum class OutOfRange { kZeroFill, kMaxCost };

inline constexpr std::size_t kDefaultVolumeCapBytes = std::size_t{8} << 30;

/// G x D x H x W matching-cost array. Entry (g, d, y, x) compares left pixel
/// (y, x) with right pixel (y, x - d); lower is a better match.
class CostVolume {
 public:
  CostVolume() = default;

  int groups() const noexcept { return groups_; }
  int disparities() const noexcept { return disparities_; }
  int height() const noexcept { return height_; }
  int width() const noexcept { return width_; }
  std::size_t plane_size() const noexcept {
    return static_cast<std::size_t>(height_) * width_;
  }
  std::size_t size() const noexcept { return data_.size(); }

  float at(int g, int d, int y, int x) const { return data_[index(g, d, y, x)]; }
  float& at(int g, int d, int y, int x) { return data_[index(g, d, y, x)]; }
  /// 3D accessor, group 0.
  float at(int d, int y, int x) const { return data_[index(0, d, y, x)]; }
  float& at(int d, int y, int x) { return data_[index(0, d, y, x)]; }

  std::span<const float> data() const noexcept { return data_; }
  std::span<float> data() noexcept { return data_; }

  std::span<const GroupRole> roles() const noexcept { return roles_; }
  void set_roles(std::vector<GroupRole> roles);

  OutOfRange out_of_range() const noexcept { return out_of_range_; }
  void set_out_of_range(OutOfRange p) noexcept { out_of_range_ = p; }

  /// Feature channels behind each concat half (0 when the volume has none).
  int concat_channels() const noexcept { return concat_channels_; }
  void set_concat_channels(int c) noexcept { concat_channels_ = c; }

  bool same_shape(const CostVolume& o) const noexcept {
    return groups_ == o.groups_ && disparities_ == o.disparities_ &&
           height_ == o.height_ && width_ == o.width_;
  }

  bool operator==(const CostVolume&) const = default;

 private:
  friend CostVolume allocate_volume(int, int, int, int, std::size_t);

  std::size_t index(int g, int d, int y, int x) const {
    return ((static_cast<std::size_t>(g) * disparities_ + d) * height_ + y) *
               width_ +
           x;
  }

  int groups_ = 0;
  int disparities_ = 0;
  int height_ = 0;
  int width_ = 0;
  int concat_channels_ = 0;
  OutOfRange out_of_range_ = OutOfRange::kZeroFill;
  std::vector<GroupRole> roles_;
  std::vector<float> data_;
};

/// Zero-initialized volume. Throws ErrorCode::kCapacity when
/// G*D*H*W*sizeof(float) exceeds `cap_bytes`.
CostVolume allocate_volume(int groups, int disparities, int height, int width,
                           std::size_t cap_bytes = kDefaultVolumeCapBytes);

/// Read-only view of every (g, y, x) at one disparity.
class CostSlice {
 public:
  CostSlice(const CostVolume& v, int d) : volume_(&v), d_(d) {}

  int groups() const noexcept { return volume_->groups(); }
  int height() const noexcept { return volume_->height(); }
  int width() const noexcept { return volume_->width(); }
  int disparity() const noexcept { return d_; }

  float at(int g, int y, int x) const { return volume_->at(g, d_, y, x); }
  std::span<const float> plane(int g) const {
    return volume_->data().subspan(
        (static_cast<std::size_t>(g) * volume_->disparities() + d_) *
            volume_->plane_size(),
        volume_->plane_size());
  }

 private:
  const CostVolume* volume_;
  int d_;
};

/// Throws ErrorCode::kIndex for d outside [0, D).
CostSlice volume_slice(const CostVolume& v, int d);

class ValidMask {
 public:
  ValidMask() = default;
  ValidMask(int height, int width, bool value = true)
      : height_(height),
        width_(width),
        bits_(static_cast<std::size_t>(height) * width, value ? 1 : 0) {}

  int height() const noexcept { return height_; }
  int width() const noexcept { return width_; }
  bool operator()(int y, int x) const {
    return bits_[static_cast<std::size_t>(y) * width_ + x] != 0;
  }
  void set(int y, int x, bool v) {
    bits_[static_cast<std::size_t>(y) * width_ + x] = v ? 1 : 0;
  }
  std::span<const std::uint8_t> bits() const noexcept { return bits_; }
  std::span<std::uint8_t> bits() noexcept { return bits_; }
  std::size_t count() const noexcept;

  bool operator==(const ValidMask&) const = default;

 private:
  int height_ = 0;
  int width_ = 0;
  std::vector<std::uint8_t> bits_;
};

/// Disparities in pixels of the map's own resolution plus a validity mask.
/// `has_negative_disparity` marks horizontally flipped samples, which may
/// only be consumed by training-style code and never scored.
class DisparityMap {
 public:
  DisparityMap() = default;
  DisparityMap(int height, int width, float fill = 0.0f, bool valid = true)
      : height_(height),
        width_(width),
        values_(static_cast<std::size_t>(height) * width, fill),
        valid_(height, width, valid) {}

  int height() const noexcept { return height_; }
  int width() const noexcept { return width_; }
  bool empty() const noexcept { return values_.empty(); }

  float at(int y, int x) const {
    return values_[static_cast<std::size_t>(y) * width_ + x];
  }
  float& at(int y, int x) {
    return values_[static_cast<std::size_t>(y) * width_ + x];
  }
  bool valid(int y, int x) const { return valid_(y, x); }
  void set_valid(int y, int x, bool v) { valid_.set(y, x, v); }

  std::span<const float> values() const noexcept { return values_; }
  std::span<float> values() noexcept { return values_; }
  const ValidMask& mask() const noexcept { return valid_; }
  ValidMask& mask() noexcept { return valid_; }

  bool has_negative_disparity() const noexcept { return negative_; }
  void set_negative_disparity(bool v) noexcept { negative_ = v; }

  bool operator==(const DisparityMap&) const = default;

 private:
  int height_ = 0;
  int width_ = 0;
  std::vector<float> values_;
  ValidMask valid_;
  bool negative_ = false;
};

}  // namespace stereobench
