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

#include "stereobench/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "stereobench/codecs.hpp"
#include "stereobench/error.hpp"
#include "stereobench/rng.hpp"

namespace stereobench {

namespace {

struct Rect {
  int y0, x0, h, w, d;
};

Raster to_raster8(const Image& img) {
  Raster r;
  r.height = img.height();
  r.width = img.width();
  r.channels = img.channels();
  r.bit_depth = 8;
  r.samples.resize(img.data().size());
  std::transform(img.data().begin(), img.data().end(), r.samples.begin(), [](float v) {
    return static_cast<std::uint16_t>(std::clamp(std::lround(v), 0L, 255L));
  });
  return r;
}

}  // namespace

StereoSample random_dot_stereogram(const StereogramConfig& cfg, std::string id) {
  if (cfg.height < 1 || cfg.width < 1 || cfg.min_disparity < 0 ||
      cfg.max_disparity < cfg.min_disparity || (cfg.channels != 1 && cfg.channels != 3) ||
      cfg.min_object_size < 1 || cfg.max_object_size < cfg.min_object_size)
    raise(ErrorCode::kInvalidArgument, "invalid stereogram configuration");
  Rng rng(derive_seed(cfg.seed, id));
  const int h = cfg.height, w = cfg.width, ch = cfg.channels;

  // Background takes the lower part of the range so objects stand in front.
  const int bg_hi = std::max(cfg.min_disparity, (cfg.min_disparity + cfg.max_disparity) / 3);
  const int bg = static_cast<int>(rng.uniform_int(cfg.min_disparity, bg_hi));
  std::vector<Rect> rects;
  for (int i = 0; i < cfg.objects; ++i) {
    Rect r;
    r.h = std::min(h, static_cast<int>(rng.uniform_int(cfg.min_object_size, cfg.max_object_size)));
    r.w = std::min(w, static_cast<int>(rng.uniform_int(cfg.min_object_size, cfg.max_object_size)));
    r.y0 = static_cast<int>(rng.uniform_int(0, h - r.h));
    r.x0 = static_cast<int>(rng.uniform_int(0, w - r.w));
    r.d = static_cast<int>(rng.uniform_int(std::min(bg + 1, cfg.max_disparity), cfg.max_disparity));
    rects.push_back(r);
  }
  std::stable_sort(rects.begin(), rects.end(), [](const Rect& a, const Rect& b) { return a.d < b.d; });

  DisparityMap gt(h, w, static_cast<float>(bg), true);
  for (const Rect& r : rects)
    for (int y = r.y0; y < r.y0 + r.h; ++y)
      for (int x = r.x0; x < r.x0 + r.w; ++x) gt.at(y, x) = static_cast<float>(r.d);

  Image left(h, w, ch);
  for (float& v : left.data()) v = static_cast<float>(rng.uniform_int(0, 255));

  Image right(h, w, ch);
  DisparityMap gt_right(h, w, 0.0f, false);
  ValidMask nonocc(h, w, false);
  std::vector<int> zbuf(w);
  for (int y = 0; y < h; ++y) {
    std::fill(zbuf.begin(), zbuf.end(), -1);
    for (int x = 0; x < w; ++x) {
      const int d = static_cast<int>(gt.at(y, x));
      const int xr = x - d;
      if (xr < 0 || d <= zbuf[xr]) continue;
      zbuf[xr] = d;
      for (int c = 0; c < ch; ++c) right.at(y, xr, c) = left.at(y, x, c);
    }
    for (int xr = 0; xr < w; ++xr) {
      if (zbuf[xr] < 0) {
        for (int c = 0; c < ch; ++c) right.at(y, xr, c) = static_cast<float>(rng.uniform_int(0, 255));
        continue;
      }
      gt_right.at(y, xr) = static_cast<float>(zbuf[xr]);
      gt_right.set_valid(y, xr, true);
    }
    for (int x = 0; x < w; ++x) {
      const int d = static_cast<int>(gt.at(y, x));
      const int xr = x - d;
      nonocc.set(y, x, xr >= 0 && zbuf[xr] == d);
    }
  }

  StereoSample s;
  s.id = std::move(id);
  s.dataset = Dataset::kKitti2015;
  s.left = std::move(left);
  s.right = std::move(right);
  s.disparity_left = std::move(gt);
  s.disparity_right = std::move(gt_right);
  s.nonoccluded = std::move(nonocc);
  return s;
}

namespace {

DisparityMap restrict_to(DisparityMap d, const std::optional<ValidMask>& m) {
  if (!m) return d;
  for (int y = 0; y < d.height(); ++y)
    for (int x = 0; x < d.width(); ++x)
      if (!(*m)(y, x)) d.set_valid(y, x, false);
  return d;
}

Bytes mask_png(const ValidMask& m) {
  Raster r{m.height(), m.width(), 1, 8, {}};
  r.samples.resize(static_cast<std::size_t>(m.height()) * m.width());
  for (std::size_t i = 0; i < r.samples.size(); ++i) r.samples[i] = m.bits()[i] ? 255 : 0;
  return write_png(r);
}

void write_kitti(const std::filesystem::path& root, const StereoSample& s, bool k2015) {
  if (!s.id.ends_with("_10"))
    raise(ErrorCode::kInvalidArgument, "KITTI ids must end in _10: " + s.id);
  const std::filesystem::path base = root / "training";
  const std::string name = s.id + ".png";
  write_file(base / (k2015 ? "image_2" : "colored_0") / name, write_png(to_raster8(s.left)));
  write_file(base / (k2015 ? "image_3" : "colored_1") / name, write_png(to_raster8(s.right)));
  if (!s.disparity_left) return;
  write_file(base / (k2015 ? "disp_occ_0" : "disp_occ") / name,
             write_kitti_disparity_png(*s.disparity_left));
  if (s.nonoccluded)
    write_file(base / (k2015 ? "disp_noc_0" : "disp_noc") / name,
               write_kitti_disparity_png(restrict_to(*s.disparity_left, s.nonoccluded)));
}

// Middlebury and ETH3D share the im0/im1/disp0GT/mask0nocc naming.
void write_scene(const std::filesystem::path& images, const std::filesystem::path& gt,
                 const StereoSample& s) {
  write_file(images / "im0.png", write_png(to_raster8(s.left)));
  write_file(images / "im1.png", write_png(to_raster8(s.right)));
  if (s.disparity_left) save_disparity(gt / "disp0GT.pfm", *s.disparity_left);
  if (s.nonoccluded) write_file(gt / "mask0nocc.png", mask_png(*s.nonoccluded));
}

void write_sceneflow(const std::filesystem::path& root, const StereoSample& s) {
  const std::filesystem::path frames = root / "frames_cleanpass" / "TRAIN" / s.id;
  const std::filesystem::path disp = root / "disparity" / "TRAIN" / s.id;
  write_file(frames / "left" / "0000.png", write_png(to_raster8(s.left)));
  write_file(frames / "right" / "0000.png", write_png(to_raster8(s.right)));
  if (s.disparity_left) save_disparity(disp / "left" / "0000.pfm", *s.disparity_left);
  if (s.disparity_right) save_disparity(disp / "right" / "0000.pfm", *s.disparity_right);
}

}  // namespace

void write_dataset_tree(Dataset dataset, const std::filesystem::path& root,
                        const std::vector<StereoSample>& samples) {
  for (const StereoSample& s : samples) {
    switch (dataset) {
      case Dataset::kKitti2015: write_kitti(root, s, true); break;
      case Dataset::kKitti2012: write_kitti(root, s, false); break;
      case Dataset::kMiddlebury:
        write_scene(root / "trainingH" / s.id, root / "trainingH" / s.id, s);
        break;
      case Dataset::kEth3d:
        write_scene(root / "two_view_training" / s.id, root / "two_view_training_gt" / s.id, s);
        break;
      case Dataset::kSceneFlow: write_sceneflow(root, s); break;
    }
  }
}

void write_kitti2015_tree(const std::filesystem::path& root,
                          const std::vector<StereoSample>& samples) {
  write_dataset_tree(Dataset::kKitti2015, root, samples);
}

}  // namespace stereobench
