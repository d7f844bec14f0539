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

// Benchmark runs over dataset manifests: estimation, evaluation, reports.

#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "stereobench/config.hpp"
#include "stereobench/dataset.hpp"
#include "stereobench/metrics.hpp"
#include "stereobench/report.hpp"

namespace stereobench {

struct RunOptions {
  int threads = 1;               // concurrent samples
  std::ostream* log = nullptr;   // progress and warnings
};

struct RunResult {
  std::vector<SampleOutcome> samples;  // manifest order
  std::optional<EvalReport> report;    // absent when nothing had ground truth
  std::size_t failed = 0;
  std::vector<std::string> warnings;

  int exit_code() const noexcept { return failed == 0 ? 0 : 1; }
};

/// Runs the configured pipeline over the manifest and writes into
/// cfg.output.dir: config.resolved.yaml, per_sample.csv and summary.csv
/// (csv format), report.md (markdown format), and optionally
/// disparity/<id>.png and visualization/<id>.png. Per-sample failures are
/// recorded and skipped; configuration and manifest errors throw.
/// Artifacts do not depend on options.threads.
RunResult run(const RunConfig& cfg, const RunOptions& options = {});

/// bad-tau convention per dataset: KITTI 3, Middlebury 2, ETH3D 1, SceneFlow 3.
double cross_domain_threshold(Dataset d);

struct CrossDomainResult {
  std::vector<CrossDomainRow> rows;  // plan order
  std::size_t failed = 0;

  int exit_code() const noexcept { return failed == 0 ? 0 : 1; }
};

/// Evaluates one pipeline on every target and writes cross_domain.csv and
/// cross_domain.md, plus a per-target run directory.
CrossDomainResult cross_domain(const CrossDomainPlan& plan, const RunOptions& options = {});

/// Looks for <est_dir>/<id>.png, then <id>.pfm.
std::optional<std::filesystem::path> find_estimate(const std::filesystem::path& est_dir,
                                                   const std::string& id);

/// Scores externally produced disparity files against the manifest's ground
/// truth. Entries without ground truth are skipped. Throws kMissingFile naming
/// the id when an estimate is absent and kShapeMismatch on size mismatch.
EvalReport eval_only(const std::filesystem::path& est_dir, const DatasetManifest& manifest,
                     const MetricSpec& spec);

}  // namespace stereobench
