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

#include "stereobench/harness.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <thread>

#include "stereobench/codecs.hpp"
#include "stereobench/error.hpp"
#include "stereobench/pipeline.hpp"
#include "stereobench/visualize.hpp"

namespace stereobench {

namespace fs = std::filesystem;

namespace {

class Logger {
 public:
  explicit Logger(std::ostream* os) : os_(os) {}
  void operator()(const std::string& line) {
    if (!os_) return;
    std::lock_guard lock(mu_);
    *os_ << line << '\n';
  }

 private:
  std::ostream* os_;
  std::mutex mu_;
};

void write_text(const fs::path& path, const std::string& text) {
  write_file(path, Bytes(text.begin(), text.end()));
}

// Calls fn(i) for i in [0, n) on up to `threads` workers.
template <class F>
void parallel_for(std::size_t n, int threads, F fn) {
  const std::size_t workers = std::min<std::size_t>(n, static_cast<std::size_t>(std::max(1, threads)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) fn(i);
    });
}

float colormap_range(const RunConfig& cfg) {
  if (cfg.output.colormap_max > 0.0f) return cfg.output.colormap_max;
  const PipelineConfig& p = cfg.pipeline;
  const int scale = p.regress.upsample_to_full ? p.feature.scale : 1;
  return static_cast<float>(p.cost.max_disparity * scale);
}

SampleOutcome process(const DatasetManifest& m, std::size_t i, const RunConfig& cfg) {
  SampleOutcome out;
  out.id = m.entries[i].id;
  try {
    StereoSample s = load_sample(m, i);
    if (!cfg.augment.empty()) s = compose(cfg.augment, s, cfg.seed).sample;
    const DisparityMap d = estimate_disparity(s.left, s.right, cfg.pipeline);
    const fs::path file = fs::path(out.id + ".png");
    if (cfg.output.save_disparity)
      write_file(cfg.output.dir / "disparity" / file, write_kitti_disparity_png(d));
    if (cfg.output.save_visualization)
      write_file(cfg.output.dir / "visualization" / file, visualize(d, colormap_range(cfg)));
    if (s.disparity_left) {
      const ValidMask* noc = s.nonoccluded ? &*s.nonoccluded : nullptr;
      out.row = evaluate_sample(out.id, d, *s.disparity_left, cfg.eval, noc);
    } else {
      out.status = SampleStatus::kNoGroundTruth;
    }
  } catch (const std::exception& e) {
    out.status = SampleStatus::kFailed;
    out.row.reset();
    out.message = e.what();
  }
  return out;
}

}  // namespace

RunResult run(const RunConfig& cfg, const RunOptions& options) {
  cfg.validate();
  Logger log(options.log);
  fs::create_directories(cfg.output.dir);
  write_text(cfg.output.dir / "config.resolved.yaml", emit_config(cfg));

  DatasetManifest manifest = build_manifest(cfg.data.request());
  if (cfg.data.limit > 0 && manifest.entries.size() > cfg.data.limit)
    manifest.entries.resize(cfg.data.limit);
  RunResult result;
  result.warnings = manifest.warnings;
  for (const std::string& w : manifest.warnings) log("warning: " + w);

  const std::size_t n = manifest.entries.size();
  result.samples.resize(n);
  std::atomic<std::size_t> done{0};
  parallel_for(n, options.threads, [&](std::size_t i) {
    result.samples[i] = process(manifest, i, cfg);
    const SampleOutcome& s = result.samples[i];
    log("[" + std::to_string(++done) + "/" + std::to_string(n) + "] " + s.id + ": " +
        (s.status == SampleStatus::kFailed ? "FAILED " + s.message
                                           : std::string(sample_status_name(s.status))));
  });

  std::vector<MetricRow> rows;
  for (const SampleOutcome& s : result.samples) {
    if (s.status == SampleStatus::kFailed) ++result.failed;
    if (s.row) rows.push_back(*s.row);
  }
  if (!rows.empty()) result.report = aggregate(std::move(rows), cfg.eval);

  if (cfg.output.wants("csv")) {
    write_text(cfg.output.dir / "per_sample.csv", per_sample_csv(result.samples, cfg.eval));
    if (result.report) write_text(cfg.output.dir / "summary.csv", summary_csv(*result.report));
  }
  if (cfg.output.wants("markdown")) {
    const std::string title = std::string(dataset_name(cfg.data.dataset)) + " " +
                              std::string(split_name(cfg.data.split));
    write_text(cfg.output.dir / "report.md", report_markdown(title, result.samples, result.report));
  }
  log(std::to_string(n) + " samples, " + std::to_string(result.failed) + " failed");
  return result;
}

double cross_domain_threshold(Dataset d) {
  switch (d) {
    case Dataset::kKitti2012:
    case Dataset::kKitti2015:
    case Dataset::kSceneFlow: return 3.0;
    case Dataset::kMiddlebury: return 2.0;
    case Dataset::kEth3d: return 1.0;
  }
  return 3.0;
}

CrossDomainResult cross_domain(const CrossDomainPlan& plan, const RunOptions& options) {
  plan.validate();
  fs::create_directories(plan.output.dir);
  write_text(plan.output.dir / "plan.resolved.yaml", emit_plan(plan));

  CrossDomainResult result;
  std::map<std::string, int> seen;
  for (const CrossDomainTarget& t : plan.targets) {
    const double tau = cross_domain_threshold(t.dataset);
    RunConfig rc;
    rc.seed = plan.seed;
    rc.data = {t.dataset, t.root, t.split, t.variant, t.limit};
    rc.pipeline = plan.pipeline;
    rc.eval = MetricSpec{};
    rc.eval.bad_thresholds = {tau};
    rc.output = plan.output;
    std::string sub(dataset_name(t.dataset));
    if (const int k = ++seen[sub]; k > 1) sub += "_" + std::to_string(k);
    rc.output.dir = plan.output.dir / sub;

    const RunResult r = run(rc, options);
    CrossDomainRow row;
    row.dataset = t.dataset;
    row.variant = t.variant;
    row.samples = r.samples.size();
    row.failed = r.failed;
    row.threshold = tau;
    if (r.report) {
      row.valid_pixels = r.report->total_pixels;
      row.epe = r.report->pixel_weighted.epe;
      row.bad = r.report->pixel_weighted.bad.front();
      row.epe_sample_mean = r.report->sample_mean.epe;
      row.bad_sample_mean = r.report->sample_mean.bad.front();
    }
    result.failed += r.failed;
    result.rows.push_back(std::move(row));
  }
  if (plan.output.wants("csv"))
    write_text(plan.output.dir / "cross_domain.csv", cross_domain_csv(result.rows));
  if (plan.output.wants("markdown"))
    write_text(plan.output.dir / "cross_domain.md", cross_domain_markdown(result.rows));
  return result;
}

std::optional<fs::path> find_estimate(const fs::path& est_dir, const std::string& id) {
  for (const char* ext : {".png", ".pfm"}) {
    const fs::path p = est_dir / (id + ext);
    if (fs::is_regular_file(p)) return p;
  }
  return std::nullopt;
}

EvalReport eval_only(const fs::path& est_dir, const DatasetManifest& manifest,
                     const MetricSpec& spec) {
  spec.validate();
  if (!fs::is_directory(est_dir))
    raise(ErrorCode::kMissingRoot, "estimate directory not found: " + est_dir.string());
  std::vector<MetricRow> rows;
  for (std::size_t i = 0; i < manifest.entries.size(); ++i) {
    const ManifestEntry& e = manifest.entries[i];
    if (!e.disparity_left) continue;
    const auto file = find_estimate(est_dir, e.id);
    if (!file) raise(ErrorCode::kMissingFile, "no estimate for id '" + e.id + "' in " + est_dir.string());
    const StereoSample s = load_sample(manifest, i);
    const DisparityMap est = load_disparity(*file);
    const DisparityMap& gt = *s.disparity_left;
    if (est.height() != gt.height() || est.width() != gt.width())
      raise(ErrorCode::kShapeMismatch,
            "estimate for '" + e.id + "' is " + std::to_string(est.width()) + "x" +
                std::to_string(est.height()) + ", ground truth is " + std::to_string(gt.width()) +
                "x" + std::to_string(gt.height()));
    const ValidMask* noc = s.nonoccluded ? &*s.nonoccluded : nullptr;
    rows.push_back(evaluate_sample(e.id, est, gt, spec, noc));
  }
  if (rows.empty()) raise(ErrorCode::kEmptyValidSet, "manifest has no ground truth to evaluate");
  return aggregate(std::move(rows), spec);
}

}  // namespace stereobench
