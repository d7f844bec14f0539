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

// Manifest-driven enumeration of the benchmark datasets. Directory layouts
// follow the official archives; see docs/datasets.md.

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "stereobench/sample.hpp"

namespace stereobench {

enum class Split { kTrain, kTest };
enum class Resolution { kFull, kHalf, kQuarter };
enum class SceneFlowPass { kClean, kFinal };

std::string_view split_name(Split s);
std::optional<Split> parse_split(std::string_view s);
std::string_view resolution_name(Resolution r);
std::optional<Resolution> parse_resolution(std::string_view s);
std::string_view pass_name(SceneFlowPass p);
std::optional<SceneFlowPass> parse_pass(std::string_view s);

struct ManifestEntry {
  std::string id;
  std::filesystem::path left;
  std::filesystem::path right;
  std::optional<std::filesystem::path> disparity_left;
  std::optional<std::filesystem::path> disparity_right;
  std::optional<std::filesystem::path> nonoccluded;  // mask or noc disparity

  bool operator==(const ManifestEntry&) const = default;
};

struct ManifestRequest {
  Dataset dataset = Dataset::kKitti2015;
  std::filesystem::path root;
  Split split = Split::kTrain;
  /// Middlebury only; defaults to half.
  std::optional<Resolution> resolution;
  /// SceneFlow only and mandatory there: cleanpass vs finalpass.
  std::optional<SceneFlowPass> pass;
};

struct DatasetManifest {
  Dataset dataset = Dataset::kKitti2015;
  std::filesystem::path root;
  Split split = Split::kTrain;
  Resolution resolution = Resolution::kFull;
  std::optional<SceneFlowPass> pass;
  /// Extra area-downsampling applied at load time when the requested
  /// Middlebury resolution is not on disk (1 = none).
  int load_downsample = 1;
  std::vector<ManifestEntry> entries;  // sorted by id
  std::vector<std::string> warnings;

  std::size_t size() const noexcept { return entries.size(); }
  bool empty() const noexcept { return entries.empty(); }
};

/// Throws kMissingRoot when the root does not exist and kConfig when a
/// SceneFlow pass is not given. Zero entries yields a manifest carrying an
/// empty-manifest warning rather than an error.
DatasetManifest build_manifest(const ManifestRequest& request);

/// Decodes entry `index`. Images come back as float [0, 255]; grayscale
/// sources stay single-channel. Failures are re-thrown as kDecode with the
/// sample id in the message.
StereoSample load_sample(const DatasetManifest& manifest, std::size_t index);

/// Pairs per split as published with each benchmark (train, test).
struct OfficialSplitSize {
  std::size_t train;
  std::size_t test;
};
OfficialSplitSize official_split_size(Dataset d);

}  // namespace stereobench
