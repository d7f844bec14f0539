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

#include "stereobench/report.hpp"

#include <charconv>
#include <cstdio>

namespace stereobench {

namespace {

std::string opt(const std::optional<double>& v) { return v ? format_metric(*v) : ""; }

// Quotes a CSV field when it contains a separator, quote or newline.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string md_cell(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c == '\n' ? ' ' : c;
  }
  return out;
}

std::string metric_header(const MetricSpec& spec) {
  std::string h;
  if (spec.epe) h += ",epe";
  for (double t : spec.bad_thresholds) h += "," + bad_label(t);
  if (spec.d1_official) h += ",d1_official";
  return h;
}

std::string metric_cells(const MetricSpec& spec, const std::optional<double>& epe,
                         const std::vector<double>& bad, const std::optional<double>& d1) {
  std::string s;
  if (spec.epe) s += "," + opt(epe);
  for (std::size_t i = 0; i < spec.bad_thresholds.size(); ++i)
    s += "," + (i < bad.size() ? format_metric(bad[i]) : std::string());
  if (spec.d1_official) s += "," + opt(d1);
  return s;
}

}  // namespace

std::string_view sample_status_name(SampleStatus s) {
  switch (s) {
    case SampleStatus::kOk: return "ok";
    case SampleStatus::kNoGroundTruth: return "no_gt";
    case SampleStatus::kFailed: return "failed";
  }
  return "unknown";
}

std::string format_metric(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string bad_label(double tau) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, tau);
  return "bad_" + std::string(buf, r.ptr);
}

std::string per_sample_csv(const std::vector<SampleOutcome>& samples, const MetricSpec& spec) {
  std::string out = "schema_version,id,status,valid_pixels" + metric_header(spec) + ",message\n";
  const std::string version = std::to_string(kReportSchemaVersion);
  for (const SampleOutcome& s : samples) {
    out += version + "," + csv_field(s.id) + "," + std::string(sample_status_name(s.status)) + ",";
    if (s.row) {
      out += std::to_string(s.row->valid_pixels) +
             metric_cells(spec, s.row->epe, s.row->bad, s.row->d1_official);
    } else {
      out += metric_cells(spec, std::nullopt, {}, std::nullopt);
    }
    out += "," + csv_field(s.message) + "\n";
  }
  return out;
}

std::string summary_csv(const EvalReport& report) {
  const MetricSpec& spec = report.spec;
  std::string out = "schema_version,aggregate,samples,valid_pixels" + metric_header(spec) + "\n";
  const std::string lead = std::to_string(kReportSchemaVersion);
  const std::string counts =
      std::to_string(report.rows.size()) + "," + std::to_string(report.total_pixels);
  const MetricAggregate& pw = report.pixel_weighted;
  const MetricAggregate& sm = report.sample_mean;
  out += lead + ",pixel_weighted," + counts + metric_cells(spec, pw.epe, pw.bad, pw.d1_official) + "\n";
  out += lead + ",sample_mean," + counts + metric_cells(spec, sm.epe, sm.bad, sm.d1_official) + "\n";
  return out;
}

std::string report_markdown(const std::string& title, const std::vector<SampleOutcome>& samples,
                            const std::optional<EvalReport>& report) {
  std::size_t ok = 0, no_gt = 0, failed = 0;
  for (const SampleOutcome& s : samples) {
    if (s.status == SampleStatus::kOk) ++ok;
    else if (s.status == SampleStatus::kNoGroundTruth) ++no_gt;
    else ++failed;
  }
  std::string out = "# " + title + "\n\n";
  out += "Samples: " + std::to_string(samples.size()) + " (evaluated " + std::to_string(ok) +
         ", without ground truth " + std::to_string(no_gt) + ", failed " +
         std::to_string(failed) + ")\n\n";
  if (report) {
    const MetricSpec& spec = report->spec;
    std::string header = "| aggregate | valid pixels |";
    std::string rule = "|---|---:|";
    if (spec.epe) {
      header += " EPE |";
      rule += "---:|";
    }
    for (double t : spec.bad_thresholds) {
      header += " " + bad_label(t) + " (%) |";
      rule += "---:|";
    }
    if (spec.d1_official) {
      header += " D1 official (%) |";
      rule += "---:|";
    }
    out += header + "\n" + rule + "\n";
    auto row = [&](const char* name, const MetricAggregate& a) {
      std::string r = std::string("| ") + name + " | " + std::to_string(report->total_pixels) + " |";
      if (spec.epe) r += " " + opt(a.epe) + " |";
      for (double b : a.bad) r += " " + format_metric(b) + " |";
      if (spec.d1_official) r += " " + opt(a.d1_official) + " |";
      return r + "\n";
    };
    out += row("pixel-weighted", report->pixel_weighted);
    out += row("sample mean", report->sample_mean);
    out += "\nMask: " + std::string(mask_mode_name(spec.mask)) + "\n";
  } else {
    out += "No sample had ground truth; nothing was evaluated.\n";
  }
  if (failed) {
    out += "\n## Failed samples\n\n";
    for (const SampleOutcome& s : samples)
      if (s.status == SampleStatus::kFailed) out += "- `" + s.id + "`: " + md_cell(s.message) + "\n";
  }
  return out;
}

std::string cross_domain_csv(const std::vector<CrossDomainRow>& rows) {
  std::string out =
      "schema_version,dataset,variant,samples,failed,valid_pixels,metric,epe,bad,"
      "epe_sample_mean,bad_sample_mean\n";
  for (const CrossDomainRow& r : rows) {
    out += std::to_string(kReportSchemaVersion) + "," + std::string(dataset_name(r.dataset)) + "," +
           r.variant + "," + std::to_string(r.samples) + "," + std::to_string(r.failed) + "," +
           std::to_string(r.valid_pixels) + "," + bad_label(r.threshold) + "," + opt(r.epe) + "," +
           opt(r.bad) + "," + opt(r.epe_sample_mean) + "," + opt(r.bad_sample_mean) + "\n";
  }
  return out;
}

std::string cross_domain_markdown(const std::vector<CrossDomainRow>& rows) {
  std::string out = "# Cross-domain evaluation\n\n";
  out += "| dataset | variant | samples | failed | EPE | metric | value (%) |\n";
  out += "|---|---|---:|---:|---:|---|---:|\n";
  for (const CrossDomainRow& r : rows) {
    out += "| " + std::string(dataset_name(r.dataset)) + " | " +
           (r.variant.empty() ? std::string("-") : r.variant) + " | " +
           std::to_string(r.samples) + " | " + std::to_string(r.failed) + " | " + opt(r.epe) +
           " | " + bad_label(r.threshold) + " | " + opt(r.bad) + " |\n";
  }
  out += "\nValues are pixel-weighted over all evaluated pixels.\n";
  return out;
}

}  // namespace stereobench
