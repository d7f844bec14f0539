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

// Report artifacts: versioned CSV for machines, markdown tables for people.
// Column layouts are documented in docs/reports.md.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stereobench/metrics.hpp"
#include "stereobench/sample.hpp"

namespace stereobench {

inline constexpr int kReportSchemaVersion = 1;

enum class SampleStatus { kOk, kNoGroundTruth, kFailed };
std::string_view sample_status_name(SampleStatus s);

struct SampleOutcome {
  std::string id;
  SampleStatus status = SampleStatus::kOk;
  std::string message;  // failure reason
  std::optional<MetricRow> row;
};

/// One row per sample in manifest order, failures included.
std::string per_sample_csv(const std::vector<SampleOutcome>& samples, const MetricSpec& spec);
/// Pixel-weighted and per-sample-mean aggregates.
std::string summary_csv(const EvalReport& report);
std::string report_markdown(const std::string& title, const std::vector<SampleOutcome>& samples,
                            const std::optional<EvalReport>& report);

struct CrossDomainRow {
  Dataset dataset = Dataset::kKitti2015;
  std::string variant;
  std::size_t samples = 0;
  std::size_t failed = 0;
  std::size_t valid_pixels = 0;
  double threshold = 0.0;  // bad-tau convention of the dataset
  std::optional<double> epe;
  std::optional<double> bad;
  std::optional<double> epe_sample_mean;
  std::optional<double> bad_sample_mean;
};

std::string cross_domain_csv(const std::vector<CrossDomainRow>& rows);
std::string cross_domain_markdown(const std::vector<CrossDomainRow>& rows);

/// Fixed six-decimal rendering used by every report.
std::string format_metric(double v);
/// Threshold label, e.g. 3 -> "bad_3", 0.5 -> "bad_0.5".
std::string bad_label(double tau);

}  // namespace stereobench
