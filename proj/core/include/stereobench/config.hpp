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

// Run configuration: YAML schema, strict parsing and a canonical echo.
// The schema is documented in docs/config.md.

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "stereobench/augment.hpp"
#include "stereobench/dataset.hpp"
#include "stereobench/metrics.hpp"
#include "stereobench/pipeline.hpp"

namespace stereobench {

struct DataConfig {
  Dataset dataset = Dataset::kKitti2015;
  std::filesystem::path root;
  Split split = Split::kTrain;
  /// SceneFlow: clean|final (required). Middlebury: full|half|quarter
  /// (default half). Empty for every other dataset.
  std::string variant;
  std::size_t limit = 0;  // evaluate the first N pairs; 0 means all

  /// Throws kConfig when the variant does not fit the dataset.
  ManifestRequest request() const;
  bool operator==(const DataConfig&) const = default;
};

struct OutputConfig {
  std::filesystem::path dir = "stereobench_out";
  std::vector<std::string> formats{"csv", "markdown"};
  bool save_disparity = false;
  bool save_visualization = false;
  /// Upper end of the colormap in full-resolution pixels; 0 picks
  /// max_disparity times the feature scale.
  float colormap_max = 0.0f;

  bool wants(std::string_view format) const;
  bool operator==(const OutputConfig&) const = default;
};

struct RunConfig {
  std::uint64_t seed = 0;
  DataConfig data;
  std::vector<AugmentStep> augment;
  PipelineConfig pipeline;
  MetricSpec eval;
  OutputConfig output;

  void validate() const;
  bool operator==(const RunConfig&) const = default;
};

struct CrossDomainTarget {
  Dataset dataset = Dataset::kKitti2015;
  std::filesystem::path root;
  Split split = Split::kTrain;
  std::string variant;
  std::size_t limit = 0;

  bool operator==(const CrossDomainTarget&) const = default;
};

struct CrossDomainPlan {
  std::uint64_t seed = 0;
  PipelineConfig pipeline;
  std::vector<CrossDomainTarget> targets;
  OutputConfig output;

  void validate() const;
  bool operator==(const CrossDomainPlan&) const = default;
};

/// Parses a run config. Unknown keys, wrong types and invalid values throw
/// kConfig with the dotted path of the offending field. Omitted fields take
/// their defaults; an omitted eval block follows the dataset convention.
RunConfig parse_config(std::string_view yaml);
RunConfig load_config(const std::filesystem::path& file);
/// Canonical YAML with every field materialized.
std::string emit_config(const RunConfig& cfg);

/// Cross-domain plans share the pipeline and output blocks with run configs
/// and list targets instead of a single data block. Middlebury targets are
/// always evaluated at half resolution.
CrossDomainPlan parse_plan(std::string_view yaml);
CrossDomainPlan load_plan(const std::filesystem::path& file);
std::string emit_plan(const CrossDomainPlan& plan);

}  // namespace stereobench
