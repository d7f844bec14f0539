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

#include "stereobench/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "stereobench/codecs.hpp"
#include "stereobench/error.hpp"
#include "stereobench/resample.hpp"

namespace fs = std::filesystem;

namespace stereobench {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::optional<fs::path> if_exists(const fs::path& p) {
  if (fs::is_regular_file(p)) return p;
  return std::nullopt;
}

// Sorted regular files in `dir` whose names end with `suffix`.
std::vector<fs::path> list_files(const fs::path& dir, std::string_view suffix) {
  std::vector<fs::path> out;
  if (!fs::is_directory(dir)) return out;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (!e.is_regular_file()) continue;
    const std::string name = e.path().filename().string();
    if (name.size() >= suffix.size() &&
        name.compare(name.size() - suffix.size(), suffix.size(), suffix) == 0)
      out.push_back(e.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<fs::path> list_dirs(const fs::path& dir) {
  std::vector<fs::path> out;
  if (!fs::is_directory(dir)) return out;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_directory()) out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

// KITTI: <split>/<left_dir>/NNNNNN_10.png with matching right images and
// (train only) disparity maps for all pixels and non-occluded pixels.
void enumerate_kitti(DatasetManifest& m, std::string_view left_dir,
                     std::string_view right_dir, std::string_view occ_dir,
                     std::string_view noc_dir) {
  const fs::path base =
      m.root / (m.split == Split::kTrain ? "training" : "testing");
  for (const fs::path& left : list_files(base / left_dir, "_10.png")) {
    const std::string name = left.filename().string();
    auto right = if_exists(base / right_dir / name);
    if (!right) {
      m.warnings.push_back("skipping " + name + ": right view missing");
      continue;
    }
    ManifestEntry e;
    e.id = left.stem().string();
    e.left = left;
    e.right = *right;
    e.disparity_left = if_exists(base / occ_dir / name);
    e.nonoccluded = if_exists(base / noc_dir / name);
    m.entries.push_back(std::move(e));
  }
}

// Middlebury 2014 (MiddEval3): <training|test><F|H|Q>/<scene>/im0.png ...
void enumerate_middlebury(DatasetManifest& m) {
  const std::string prefix = m.split == Split::kTrain ? "training" : "test";
  const char letters[] = {'F', 'H', 'Q'};
  const int wanted = static_cast<int>(m.resolution);
  // Use the requested resolution when present, otherwise the closest finer
  // one and downsample at load time.
  int found = -1;
  for (int r = wanted; r >= 0; --r)
    if (fs::is_directory(m.root / (prefix + letters[r]))) {
      found = r;
      break;
    }
  if (found < 0) return;
  m.load_downsample = 1 << (wanted - found);
  if (m.load_downsample != 1)
    m.warnings.push_back(std::string("resolution ") +
                         std::string(resolution_name(m.resolution)) +
                         " not on disk; downsampling " + prefix +
                         letters[found] + " by " +
                         std::to_string(m.load_downsample));
  const fs::path base = m.root / (prefix + letters[found]);
  for (const fs::path& scene : list_dirs(base)) {
    auto left = if_exists(scene / "im0.png");
    auto right = if_exists(scene / "im1.png");
    if (!left || !right) continue;
    ManifestEntry e;
    e.id = scene.filename().string();
    e.left = *left;
    e.right = *right;
    e.disparity_left = if_exists(scene / "disp0GT.pfm");
    e.disparity_right = if_exists(scene / "disp1GT.pfm");
    e.nonoccluded = if_exists(scene / "mask0nocc.png");
    m.entries.push_back(std::move(e));
  }
}

// ETH3D two-view: two_view_<training|test>/<scene>/im0.png, ground truth in
// two_view_training_gt/<scene>/disp0GT.pfm + mask0nocc.png.
void enumerate_eth3d(DatasetManifest& m) {
  const bool train = m.split == Split::kTrain;
  const fs::path base = m.root / (train ? "two_view_training" : "two_view_test");
  const fs::path gt = m.root / "two_view_training_gt";
  for (const fs::path& scene : list_dirs(base)) {
    auto left = if_exists(scene / "im0.png");
    auto right = if_exists(scene / "im1.png");
    if (!left || !right) continue;
    ManifestEntry e;
    e.id = scene.filename().string();
    e.left = *left;
    e.right = *right;
    if (train) {
      e.disparity_left = if_exists(gt / e.id / "disp0GT.pfm");
      e.nonoccluded = if_exists(gt / e.id / "mask0nocc.png");
    }
    m.entries.push_back(std::move(e));
  }
}

// SceneFlow (FlyingThings3D layout):
//   frames_<pass>/<TRAIN|TEST>/<...>/left/NNNN.png  (+ right/)
//   disparity/<TRAIN|TEST>/<...>/left/NNNN.pfm      (+ right/)
void enumerate_sceneflow(DatasetManifest& m) {
  const std::string split = m.split == Split::kTrain ? "TRAIN" : "TEST";
  const fs::path frames =
      m.root / ("frames_" + std::string(pass_name(*m.pass))) / split;
  const fs::path disp = m.root / "disparity" / split;
  if (!fs::is_directory(frames)) return;
  std::vector<fs::path> lefts;
  for (const auto& e : fs::recursive_directory_iterator(frames)) {
    if (!e.is_regular_file() || e.path().extension() != ".png") continue;
    if (e.path().parent_path().filename() == "left") lefts.push_back(e.path());
  }
  for (const fs::path& left : lefts) {
    const fs::path seq = fs::relative(left.parent_path().parent_path(), frames);
    const std::string stem = left.stem().string();
    auto right = if_exists(frames / seq / "right" / left.filename());
    if (!right) continue;
    ManifestEntry e;
    e.id = (seq / stem).generic_string();
    e.left = left;
    e.right = *right;
    e.disparity_left = if_exists(disp / seq / "left" / (stem + ".pfm"));
    e.disparity_right = if_exists(disp / seq / "right" / (stem + ".pfm"));
    m.entries.push_back(std::move(e));
  }
}

DisparityMap downsample_gt(DisparityMap d, int s) {
  return s == 1 ? d : area_downsample_disparity(d, s);
}

}  // namespace

std::string_view dataset_name(Dataset d) {
  switch (d) {
    case Dataset::kSceneFlow: return "sceneflow";
    case Dataset::kKitti2012: return "kitti2012";
    case Dataset::kKitti2015: return "kitti2015";
    case Dataset::kMiddlebury: return "middlebury";
    case Dataset::kEth3d: return "eth3d";
  }
  return "unknown";
}

std::optional<Dataset> parse_dataset(std::string_view name) {
  const std::string n = lower(name);
  for (Dataset d : {Dataset::kSceneFlow, Dataset::kKitti2012, Dataset::kKitti2015,
                    Dataset::kMiddlebury, Dataset::kEth3d})
    if (n == dataset_name(d)) return d;
  return std::nullopt;
}

std::string_view split_name(Split s) { return s == Split::kTrain ? "train" : "test"; }

std::optional<Split> parse_split(std::string_view s) {
  const std::string n = lower(s);
  if (n == "train") return Split::kTrain;
  if (n == "test") return Split::kTest;
  return std::nullopt;
}

std::string_view resolution_name(Resolution r) {
  switch (r) {
    case Resolution::kFull: return "full";
    case Resolution::kHalf: return "half";
    case Resolution::kQuarter: return "quarter";
  }
  return "unknown";
}

std::optional<Resolution> parse_resolution(std::string_view s) {
  const std::string n = lower(s);
  if (n == "full") return Resolution::kFull;
  if (n == "half") return Resolution::kHalf;
  if (n == "quarter") return Resolution::kQuarter;
  return std::nullopt;
}

std::string_view pass_name(SceneFlowPass p) {
  return p == SceneFlowPass::kClean ? "cleanpass" : "finalpass";
}

std::optional<SceneFlowPass> parse_pass(std::string_view s) {
  const std::string n = lower(s);
  if (n == "cleanpass" || n == "clean") return SceneFlowPass::kClean;
  if (n == "finalpass" || n == "final") return SceneFlowPass::kFinal;
  return std::nullopt;
}

OfficialSplitSize official_split_size(Dataset d) {
  switch (d) {
    case Dataset::kSceneFlow: return {35454, 4370};
    case Dataset::kKitti2012: return {194, 195};
    case Dataset::kKitti2015: return {200, 200};
    case Dataset::kMiddlebury: return {15, 15};
    case Dataset::kEth3d: return {27, 20};
  }
  return {0, 0};
}

void StereoSample::validate() const {
  if (left.height() != right.height() || left.width() != right.width())
    raise(ErrorCode::kShapeMismatch, id + ": left and right views differ in size");
  auto check = [&](const auto& opt, const char* what) {
    if (opt && (opt->height() != left.height() || opt->width() != left.width()))
      raise(ErrorCode::kShapeMismatch, id + ": " + what + " does not match image size");
  };
  check(disparity_left, "left disparity");
  check(disparity_right, "right disparity");
  check(nonoccluded, "occlusion mask");
}

DatasetManifest build_manifest(const ManifestRequest& request) {
  if (!fs::is_directory(request.root))
    raise(ErrorCode::kMissingRoot, "dataset root does not exist: " +
                                       request.root.string());
  DatasetManifest m;
  m.dataset = request.dataset;
  m.root = request.root;
  m.split = request.split;
  if (request.dataset == Dataset::kMiddlebury)
    m.resolution = request.resolution.value_or(Resolution::kHalf);
  else if (request.resolution && *request.resolution != Resolution::kFull)
    raise(ErrorCode::kConfig, "resolution variants apply to Middlebury only");

  switch (request.dataset) {
    case Dataset::kSceneFlow:
      if (!request.pass)
        raise(ErrorCode::kConfig,
              "SceneFlow requires an explicit pass (cleanpass or finalpass)");
      m.pass = request.pass;
      enumerate_sceneflow(m);
      break;
    case Dataset::kKitti2012:
      enumerate_kitti(m, "colored_0", "colored_1", "disp_occ", "disp_noc");
      break;
    case Dataset::kKitti2015:
      enumerate_kitti(m, "image_2", "image_3", "disp_occ_0", "disp_noc_0");
      break;
    case Dataset::kMiddlebury:
      enumerate_middlebury(m);
      break;
    case Dataset::kEth3d:
      enumerate_eth3d(m);
      break;
  }
  std::stable_sort(m.entries.begin(), m.entries.end(),
                   [](const ManifestEntry& a, const ManifestEntry& b) { return a.id < b.id; });
  if (m.entries.empty())
    m.warnings.push_back("empty-manifest: no " + std::string(dataset_name(m.dataset)) + " " +
                         std::string(split_name(m.split)) + " pairs under " +
                         m.root.string());
  return m;
}

StereoSample load_sample(const DatasetManifest& manifest, std::size_t index) {
  if (index >= manifest.entries.size())
    raise(ErrorCode::kIndex, "sample index " + std::to_string(index) +
                                 " >= manifest size " +
                                 std::to_string(manifest.entries.size()));
  const ManifestEntry& e = manifest.entries[index];
  const int s = manifest.load_downsample;
  try {
    StereoSample out;
    out.id = e.id;
    out.dataset = manifest.dataset;
    out.left = area_downsample(load_image(e.left), s);
    out.right = area_downsample(load_image(e.right), s);
    if (e.disparity_left)
      out.disparity_left = downsample_gt(load_disparity(*e.disparity_left), s);
    if (e.disparity_right)
      out.disparity_right = downsample_gt(load_disparity(*e.disparity_right), s);
    if (e.nonoccluded) {
      const bool kitti = manifest.dataset == Dataset::kKitti2012 ||
                         manifest.dataset == Dataset::kKitti2015;
      // KITTI ships a noc disparity map; its valid pixels are non-occluded.
      ValidMask mask = kitti ? load_disparity(*e.nonoccluded).mask()
                             : load_nonoccluded_mask(*e.nonoccluded);
      out.nonoccluded = area_downsample_mask(mask, s);
    }
    out.validate();
    return out;
  } catch (const Error& err) {
    raise(ErrorCode::kDecode, "sample '" + e.id + "': " + err.what());
  } catch (const std::exception& err) {
    raise(ErrorCode::kDecode, "sample '" + e.id + "': " + err.what());
  }
}

}  // namespace stereobench
