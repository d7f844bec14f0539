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

#ifdef STEREOBENCH_CLI11_PACKAGE
#include <CLI/CLI.hpp>
#else
#include <CLI11.hpp>
#endif

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "stereobench/codecs.hpp"
#include "stereobench/config.hpp"
#include "stereobench/error.hpp"
#include "stereobench/harness.hpp"
#include "stereobench/synthetic.hpp"
#include "stereobench/visualize.hpp"

namespace sb = stereobench;
namespace fs = std::filesystem;

namespace {

struct DataFlags {
  std::string dataset;
  std::string root;
  std::string split = "train";
  std::string variant;

  void add(CLI::App* app) {
    app->add_option("--dataset", dataset, "sceneflow|kitti2012|kitti2015|middlebury|eth3d");
    app->add_option("--root", root, "dataset root directory");
    app->add_option("--split", split, "train|test")->capture_default_str();
    app->add_option("--variant", variant, "SceneFlow pass or Middlebury resolution");
  }

  // Builds a data block through the config parser so validation is shared.
  sb::RunConfig to_config() const {
    if (dataset.empty() || root.empty())
      sb::raise(sb::ErrorCode::kConfig, "--dataset and --root are required without --config");
    std::string yaml = "data:\n  dataset: \"" + dataset + "\"\n  root: \"" + root +
                       "\"\n  split: \"" + split + "\"\n  variant: \"" + variant + "\"\n";
    return sb::parse_config(yaml);
  }
};

void write_text(const fs::path& p, const std::string& s) {
  sb::write_file(p, sb::Bytes(s.begin(), s.end()));
}

std::string csv_path(const std::optional<fs::path>& p) { return p ? p->generic_string() : ""; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stereo matching benchmark harness"};
  app.require_subcommand(1);

  std::string config_file, output, estimates, input;
  std::optional<std::uint64_t> seed;
  int threads = 1;

  auto* run = app.add_subcommand("run", "run a pipeline over a dataset and write reports");
  run->add_option("--config", config_file, "run configuration (YAML)")->required()->check(CLI::ExistingFile);
  run->add_option("--output", output, "output directory (overrides output.dir)");
  run->add_option("--seed", seed, "seed for augmentation (overrides seed)");
  run->add_option("--threads", threads, "samples processed concurrently")->check(CLI::PositiveNumber);

  auto* cross = app.add_subcommand("cross-domain", "evaluate one pipeline on several datasets");
  cross->add_option("--config", config_file, "cross-domain plan (YAML)")->required()->check(CLI::ExistingFile);
  cross->add_option("--output", output, "output directory (overrides output.dir)");
  cross->add_option("--seed", seed, "seed (overrides seed)");
  cross->add_option("--threads", threads, "samples processed concurrently")->check(CLI::PositiveNumber);

  DataFlags eval_data;
  std::string mask;
  std::vector<double> thresholds;
  bool d1_official = false;
  auto* eval = app.add_subcommand("eval", "score disparity files produced by another method");
  eval->add_option("--estimates", estimates, "directory holding <id>.png or <id>.pfm")->required();
  eval->add_option("--config", config_file, "take data and eval blocks from a run config")->check(CLI::ExistingFile);
  eval_data.add(eval);
  eval->add_option("--mask", mask, "all|noc");
  eval->add_option("--thresholds", thresholds, "bad-tau thresholds in pixels");
  eval->add_flag("--d1-official", d1_official, "also report the KITTI devkit D1");
  eval->add_option("--output", output, "directory for per_sample.csv, summary.csv and report.md");

  float range = 0.0f;
  auto* vis = app.add_subcommand("vis", "color-map a disparity file");
  vis->add_option("input", input, "disparity PNG (KITTI encoding) or PFM")->required()->check(CLI::ExistingFile);
  vis->add_option("--output", output, "output PNG")->required();
  vis->add_option("--range", range, "disparity mapped to the top of the colormap (default: max valid)");

  DataFlags manifest_data;
  auto* manifest = app.add_subcommand("manifest", "list the pairs found under a dataset root");
  manifest->add_option("--config", config_file, "take the data block from a run config")->check(CLI::ExistingFile);
  manifest_data.add(manifest);
  manifest->add_option("--output", output, "write CSV here instead of stdout");

  sb::StereogramConfig synth_cfg;
  int count = 10;
  std::string synth_layout = "kitti2015";
  auto* synth = app.add_subcommand("synth", "write random-dot stereograms as a dataset tree");
  synth->add_option("--layout", synth_layout, "sceneflow|kitti2012|kitti2015|middlebury|eth3d")
      ->capture_default_str();
  synth->add_option("--output", output, "dataset root to create")->required();
  synth->add_option("--count", count, "number of pairs")->capture_default_str()->check(CLI::PositiveNumber);
  synth->add_option("--seed", synth_cfg.seed, "generator seed")->capture_default_str();
  synth->add_option("--height", synth_cfg.height)->capture_default_str();
  synth->add_option("--width", synth_cfg.width)->capture_default_str();
  synth->add_option("--max-disparity", synth_cfg.max_disparity)->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  sb::RunOptions options;
  options.threads = threads;
  options.log = &std::cerr;

  try {
    if (*run) {
      sb::RunConfig cfg = sb::load_config(config_file);
      if (!output.empty()) cfg.output.dir = output;
      if (seed) cfg.seed = *seed;
      return sb::run(cfg, options).exit_code();
    }
    if (*cross) {
      sb::CrossDomainPlan plan = sb::load_plan(config_file);
      if (!output.empty()) plan.output.dir = output;
      if (seed) plan.seed = *seed;
      const sb::CrossDomainResult r = sb::cross_domain(plan, options);
      std::cout << sb::cross_domain_markdown(r.rows);
      return r.exit_code();
    }
    if (*eval) {
      sb::RunConfig cfg = config_file.empty() ? eval_data.to_config() : sb::load_config(config_file);
      if (!mask.empty()) {
        const auto m = sb::parse_mask_mode(mask);
        if (!m) sb::raise(sb::ErrorCode::kConfig, "--mask must be all or noc");
        cfg.eval.mask = *m;
      }
      if (!thresholds.empty()) cfg.eval.bad_thresholds = thresholds;
      if (d1_official) cfg.eval.d1_official = true;
      const sb::DatasetManifest m = sb::build_manifest(cfg.data.request());
      for (const std::string& w : m.warnings) std::cerr << "warning: " << w << '\n';
      const sb::EvalReport report = sb::eval_only(estimates, m, cfg.eval);
      std::vector<sb::SampleOutcome> samples;
      for (const sb::MetricRow& row : report.rows) samples.push_back({row.id, sb::SampleStatus::kOk, "", row});
      const std::string md = sb::report_markdown("Evaluation of " + estimates, samples, report);
      if (!output.empty()) {
        write_text(fs::path(output) / "per_sample.csv", sb::per_sample_csv(samples, cfg.eval));
        write_text(fs::path(output) / "summary.csv", sb::summary_csv(report));
        write_text(fs::path(output) / "report.md", md);
      }
      std::cout << md;
      return 0;
    }
    if (*vis) {
      const sb::DisparityMap d = sb::load_disparity(input);
      float r = range;
      if (r <= 0.0f) {
        for (int y = 0; y < d.height(); ++y)
          for (int x = 0; x < d.width(); ++x)
            if (d.valid(y, x)) r = std::max(r, d.at(y, x));
        if (r <= 0.0f) r = 1.0f;
      }
      sb::write_file(output, sb::visualize(d, r));
      return 0;
    }
    if (*manifest) {
      const sb::RunConfig cfg =
          config_file.empty() ? manifest_data.to_config() : sb::load_config(config_file);
      const sb::DatasetManifest m = sb::build_manifest(cfg.data.request());
      for (const std::string& w : m.warnings) std::cerr << "warning: " << w << '\n';
      std::string csv = "id,left,right,disparity_left,disparity_right,nonoccluded\n";
      for (const sb::ManifestEntry& e : m.entries)
        csv += e.id + "," + e.left.generic_string() + "," + e.right.generic_string() + "," +
               csv_path(e.disparity_left) + "," + csv_path(e.disparity_right) + "," +
               csv_path(e.nonoccluded) + "\n";
      if (output.empty()) std::cout << csv;
      else write_text(output, csv);
      std::cerr << m.size() << " pairs\n";
      return 0;
    }
    if (*synth) {
      const auto layout = sb::parse_dataset(synth_layout);
      if (!layout) sb::raise(sb::ErrorCode::kConfig, "unknown layout '" + synth_layout + "'");
      const bool kitti = *layout == sb::Dataset::kKitti2015 || *layout == sb::Dataset::kKitti2012;
      std::vector<sb::StereoSample> samples;
      for (int i = 0; i < count; ++i) {
        char id[32];
        std::snprintf(id, sizeof id, kitti ? "%06d_10" : "synth_%04d", i);
        samples.push_back(sb::random_dot_stereogram(synth_cfg, id));
      }
      sb::write_dataset_tree(*layout, output, samples);
      std::cerr << "wrote " << count << " pairs to " << output << '\n';
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
