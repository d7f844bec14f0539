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

#include "stereobench/augment.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "stereobench/error.hpp"
#include "stereobench/resample.hpp"

namespace stereobench {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// --- per-plane geometry -----------------------------------------------------

Image crop_image(const Image& img, const CropParams& p) {
  Image out(p.height, p.width, img.channels(), img.value_range());
  for (int y = 0; y < p.height; ++y)
    for (int x = 0; x < p.width; ++x)
      for (int c = 0; c < img.channels(); ++c)
        out.at(y, x, c) = img.at(y + p.y0, x + p.x0, c);
  return out;
}

ValidMask crop_mask(const ValidMask& m, const CropParams& p) {
  ValidMask out(p.height, p.width, false);
  for (int y = 0; y < p.height; ++y)
    for (int x = 0; x < p.width; ++x) out.set(y, x, m(y + p.y0, x + p.x0));
  return out;
}

DisparityMap crop_disparity(const DisparityMap& d, const CropParams& p) {
  DisparityMap out(p.height, p.width, 0.0f, false);
  out.set_negative_disparity(d.has_negative_disparity());
  for (int y = 0; y < p.height; ++y)
    for (int x = 0; x < p.width; ++x) out.at(y, x) = d.at(y + p.y0, x + p.x0);
  out.mask() = crop_mask(d.mask(), p);
  return out;
}

// Source coordinates for mirror (x) and flip (y).
Image remap_image(const Image& img, bool mirror_x, bool flip_y) {
  Image out(img.height(), img.width(), img.channels(), img.value_range());
  const int h = img.height(), w = img.width();
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x)
      for (int c = 0; c < img.channels(); ++c)
        out.at(y, x, c) = img.at(flip_y ? h - 1 - y : y, mirror_x ? w - 1 - x : x, c);
  return out;
}

ValidMask remap_mask(const ValidMask& m, bool mirror_x, bool flip_y) {
  ValidMask out(m.height(), m.width(), false);
  const int h = m.height(), w = m.width();
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x)
      out.set(y, x, m(flip_y ? h - 1 - y : y, mirror_x ? w - 1 - x : x));
  return out;
}

DisparityMap remap_disparity(const DisparityMap& d, bool mirror_x, bool flip_y,
                             bool negate) {
  DisparityMap out(d.height(), d.width(), 0.0f, false);
  out.set_negative_disparity(d.has_negative_disparity());
  const int h = d.height(), w = d.width();
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      const float v = d.at(flip_y ? h - 1 - y : y, mirror_x ? w - 1 - x : x);
      // 0 - v rather than -v so a zero disparity never turns into -0.
      out.at(y, x) = negate ? 0.0f - v : v;
    }
  out.mask() = remap_mask(d.mask(), mirror_x, flip_y);
  return out;
}

template <typename T, typename F>
std::optional<T> map_opt(const std::optional<T>& v, F f) {
  if (!v) return std::nullopt;
  return f(*v);
}

std::vector<float> channel_means(const Image& img) {
  std::vector<double> sum(img.channels(), 0.0);
  auto data = img.data();
  for (std::size_t i = 0; i < data.size(); ++i) sum[i % img.channels()] += data[i];
  std::vector<float> out(img.channels());
  const double n = static_cast<double>(img.height()) * img.width();
  for (int c = 0; c < img.channels(); ++c) out[c] = static_cast<float>(sum[c] / n);
  return out;
}

Photometric draw_photometric(const ColorStep& cfg, Rng& rng) {
  Photometric p;
  p.brightness = rng.uniform(1.0 - cfg.brightness, 1.0 + cfg.brightness);
  p.contrast = rng.uniform(1.0 - cfg.contrast, 1.0 + cfg.contrast);
  p.gamma = rng.uniform(cfg.gamma_min, cfg.gamma_max);
  return p;
}

void check_prob(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0))
    raise(ErrorCode::kConfig, std::string(what) + " probability must be in [0, 1]");
}

std::string flip_name(FlipKind k) {
  switch (k) {
    case FlipKind::kHorizontal: return "hflip";
    case FlipKind::kVertical: return "vflip";
    case FlipKind::kHorizontalSwap: return "hsflip";
  }
  return "flip";
}

CropParams draw_crop(const StereoSample& s, int height, int width, Rng& rng) {
  if (height < 1 || width < 1 || height > s.left.height() || width > s.left.width())
    raise(ErrorCode::kInvalidArgument,
          "crop " + std::to_string(height) + "x" + std::to_string(width) +
              " larger than image " + std::to_string(s.left.height()) + "x" +
              std::to_string(s.left.width()));
  CropParams p;
  p.height = height;
  p.width = width;
  p.y0 = static_cast<int>(rng.uniform_int(0, s.left.height() - height));
  p.x0 = static_cast<int>(rng.uniform_int(0, s.left.width() - width));
  return p;
}

ColorParams draw_color(const ColorStep& cfg, Rng& rng) {
  ColorParams p;
  if (rng.bernoulli(cfg.prob)) {
    p.left = draw_photometric(cfg, rng);
    p.right = cfg.asymmetric ? draw_photometric(cfg, rng) : p.left;
  }
  return p;
}

EraseParams draw_erase(const StereoSample& s, const EraseStep& cfg, Rng& rng) {
  EraseParams p;
  if (cfg.max_boxes <= 0 || !rng.bernoulli(cfg.prob)) return p;
  const int n = static_cast<int>(rng.uniform_int(1, cfg.max_boxes));
  for (int i = 0; i < n; ++i) {
    EraseBox b;
    b.height = std::min(s.right.height(),
                        static_cast<int>(rng.uniform_int(cfg.min_size, cfg.max_size)));
    b.width = std::min(s.right.width(),
                       static_cast<int>(rng.uniform_int(cfg.min_size, cfg.max_size)));
    b.y0 = static_cast<int>(rng.uniform_int(0, s.right.height() - b.height));
    b.x0 = static_cast<int>(rng.uniform_int(0, s.right.width() - b.width));
    p.boxes.push_back(b);
  }
  return p;
}

ScaleParams draw_scale(const ScaleStep& cfg, Rng& rng, int min_height, int min_width) {
  ScaleParams p;
  p.min_height = min_height;
  p.min_width = min_width;
  if (rng.bernoulli(cfg.prob)) {
    p.sx = rng.uniform(cfg.min_factor, cfg.max_factor);
    p.sy = p.sx;
    if (cfg.max_stretch > 0.0) p.sy = p.sx * std::exp2(rng.uniform(-cfg.max_stretch, cfg.max_stretch));
  }
  return p;
}

}  // namespace

// --- configuration ------------------------------------------------------------

std::string augment_step_name(const AugmentStep& step) {
  return std::visit(overloaded{
                        [](const CropStep&) { return std::string("crop"); },
                        [](const FlipStep& f) { return flip_name(f.kind); },
                        [](const ColorStep&) { return std::string("color"); },
                        [](const EraseStep&) { return std::string("erase"); },
                        [](const ScaleStep&) { return std::string("scale"); },
                    },
                    step);
}

void validate_step(const AugmentStep& step) {
  std::visit(overloaded{
                 [](const CropStep& c) {
                   if (c.height < 1 || c.width < 1)
                     raise(ErrorCode::kConfig, "crop dimensions must be >= 1");
                 },
                 [](const FlipStep& f) { check_prob(f.prob, "flip"); },
                 [](const ColorStep& c) {
                   check_prob(c.prob, "color");
                   if (c.brightness < 0 || c.brightness >= 1 || c.contrast < 0 || c.contrast >= 1)
                     raise(ErrorCode::kConfig, "color brightness/contrast must be in [0, 1)");
                   if (!(c.gamma_min > 0) || c.gamma_max < c.gamma_min)
                     raise(ErrorCode::kConfig, "color gamma range must satisfy 0 < min <= max");
                 },
                 [](const EraseStep& e) {
                   check_prob(e.prob, "erase");
                   if (e.max_boxes < 0) raise(ErrorCode::kConfig, "erase.max_boxes must be >= 0");
                   if (e.min_size < 1 || e.max_size < e.min_size)
                     raise(ErrorCode::kConfig, "erase sizes must satisfy 1 <= min <= max");
                 },
                 [](const ScaleStep& s) {
                   check_prob(s.prob, "scale");
                   if (!(s.min_factor > 0) || s.max_factor < s.min_factor)
                     raise(ErrorCode::kConfig, "scale factors must satisfy 0 < min <= max");
                   if (s.max_stretch < 0) raise(ErrorCode::kConfig, "scale.max_stretch must be >= 0");
                 },
             },
             step);
}

std::vector<AugmentStep> rc_ces_pipeline(int crop_height, int crop_width) {
  return {CropStep{crop_height, crop_width}, ColorStep{}, EraseStep{}, ScaleStep{}};
}

std::string describe(const AppliedOp& op) {
  std::ostringstream os;
  std::visit(overloaded{
                 [&](const CropParams& p) {
                   os << "crop(y0=" << p.y0 << ", x0=" << p.x0 << ", h=" << p.height
                      << ", w=" << p.width << ")";
                 },
                 [&](const FlipParams& p) {
                   os << flip_name(p.kind) << "(applied=" << (p.applied ? "true" : "false") << ")";
                 },
                 [&](const ColorParams& p) {
                   os << "color(left=[" << p.left.brightness << ", " << p.left.contrast << ", "
                      << p.left.gamma << "], right=[" << p.right.brightness << ", "
                      << p.right.contrast << ", " << p.right.gamma << "])";
                 },
                 [&](const EraseParams& p) {
                   os << "erase(boxes=" << p.boxes.size() << ")";
                 },
                 [&](const ScaleParams& p) { os << "scale(sx=" << p.sx << ", sy=" << p.sy << ")"; },
             },
             op);
  return os.str();
}

// --- geometry -------------------------------------------------------------------

StereoSample apply_crop(const StereoSample& s, const CropParams& p) {
  if (p.height < 1 || p.width < 1 || p.y0 < 0 || p.x0 < 0 ||
      p.y0 + p.height > s.left.height() || p.x0 + p.width > s.left.width())
    raise(ErrorCode::kInvalidArgument,
          "crop " + std::to_string(p.height) + "x" + std::to_string(p.width) +
              " does not fit image " + std::to_string(s.left.height()) + "x" +
              std::to_string(s.left.width()));
  StereoSample out;
  out.id = s.id;
  out.dataset = s.dataset;
  out.left = crop_image(s.left, p);
  out.right = crop_image(s.right, p);
  out.disparity_left = map_opt(s.disparity_left, [&](const auto& d) { return crop_disparity(d, p); });
  out.disparity_right = map_opt(s.disparity_right, [&](const auto& d) { return crop_disparity(d, p); });
  out.nonoccluded = map_opt(s.nonoccluded, [&](const auto& m) { return crop_mask(m, p); });
  return out;
}

StereoSample random_crop(const StereoSample& s, int height, int width, Rng& rng) {
  return apply_crop(s, draw_crop(s, height, width, rng));
}

StereoSample hflip(const StereoSample& s) {
  StereoSample out;
  out.id = s.id;
  out.dataset = s.dataset;
  out.left = remap_image(s.left, true, false);
  out.right = remap_image(s.right, true, false);
  auto flip = [](const DisparityMap& d) {
    DisparityMap m = remap_disparity(d, true, false, true);
    m.set_negative_disparity(!d.has_negative_disparity());
    return m;
  };
  out.disparity_left = map_opt(s.disparity_left, flip);
  out.disparity_right = map_opt(s.disparity_right, flip);
  out.nonoccluded = map_opt(s.nonoccluded, [](const auto& m) { return remap_mask(m, true, false); });
  return out;
}

StereoSample hsflip(const StereoSample& s) {
  if (!s.disparity_right)
    raise(ErrorCode::kPrecondition,
          "hsflip needs right-view ground truth, which sample '" + s.id + "' lacks");
  StereoSample out;
  out.id = s.id;
  out.dataset = s.dataset;
  out.left = remap_image(s.right, true, false);
  out.right = remap_image(s.left, true, false);
  out.disparity_left = remap_disparity(*s.disparity_right, true, false, false);
  out.disparity_right =
      map_opt(s.disparity_left, [](const auto& d) { return remap_disparity(d, true, false, false); });
  return out;
}

StereoSample vflip(const StereoSample& s) {
  StereoSample out;
  out.id = s.id;
  out.dataset = s.dataset;
  out.left = remap_image(s.left, false, true);
  out.right = remap_image(s.right, false, true);
  auto flip = [](const DisparityMap& d) { return remap_disparity(d, false, true, false); };
  out.disparity_left = map_opt(s.disparity_left, flip);
  out.disparity_right = map_opt(s.disparity_right, flip);
  out.nonoccluded = map_opt(s.nonoccluded, [](const auto& m) { return remap_mask(m, false, true); });
  return out;
}

// --- photometric ------------------------------------------------------------------

Image photometric(const Image& img, const Photometric& p) {
  Image out = img;
  auto data = out.data();
  if (p.brightness != 1.0)
    for (float& v : data) v = static_cast<float>(v * p.brightness);
  if (p.contrast != 1.0) {
    const std::vector<float> mean = channel_means(out);
    for (std::size_t i = 0; i < data.size(); ++i) {
      const double m = mean[i % out.channels()];
      data[i] = static_cast<float>((data[i] - m) * p.contrast + m);
    }
  }
  if (p.gamma != 1.0)
    for (float& v : data)
      v = static_cast<float>(255.0 * std::pow(std::clamp(v / 255.0, 0.0, 1.0), p.gamma));
  if (p.brightness != 1.0 || p.contrast != 1.0 || p.gamma != 1.0)
    for (float& v : data) v = std::clamp(v, 0.0f, 255.0f);
  return out;
}

StereoSample apply_color(const StereoSample& s, const ColorParams& p) {
  StereoSample out = s;
  out.left = photometric(s.left, p.left);
  out.right = photometric(s.right, p.right);
  return out;
}

StereoSample color_aug(const StereoSample& s, const ColorStep& cfg, Rng& rng) {
  return apply_color(s, draw_color(cfg, rng));
}

StereoSample apply_erase(const StereoSample& s, const EraseParams& p) {
  StereoSample out = s;
  if (p.boxes.empty()) return out;
  const std::vector<float> mean = channel_means(s.right);
  for (const EraseBox& b : p.boxes) {
    if (b.y0 < 0 || b.x0 < 0 || b.y0 + b.height > s.right.height() ||
        b.x0 + b.width > s.right.width())
      raise(ErrorCode::kInvalidArgument, "erase box outside the image");
    for (int y = b.y0; y < b.y0 + b.height; ++y)
      for (int x = b.x0; x < b.x0 + b.width; ++x)
        for (int c = 0; c < out.right.channels(); ++c) out.right.at(y, x, c) = mean[c];
  }
  return out;
}

StereoSample erase(const StereoSample& s, const EraseStep& cfg, Rng& rng) {
  return apply_erase(s, draw_erase(s, cfg, rng));
}

// --- scale ------------------------------------------------------------------------

StereoSample apply_scale(const StereoSample& s, const ScaleParams& p) {
  if (!(p.sx > 0.0) || !(p.sy > 0.0))
    raise(ErrorCode::kInvalidArgument, "scale factors must be > 0");
  if (p.sx == 1.0 && p.sy == 1.0) return s;
  const int h = std::max(1, static_cast<int>(std::lround(s.left.height() * p.sy)));
  const int w = std::max(1, static_cast<int>(std::lround(s.left.width() * p.sx)));
  if (h < p.min_height || w < p.min_width)
    raise(ErrorCode::kInvalidArgument,
          "scaled size " + std::to_string(h) + "x" + std::to_string(w) +
              " is smaller than the configured crop " + std::to_string(p.min_height) + "x" +
              std::to_string(p.min_width));
  const float ratio = static_cast<float>(w) / static_cast<float>(s.left.width());
  StereoSample out;
  out.id = s.id;
  out.dataset = s.dataset;
  out.left = resize_bilinear(s.left, h, w);
  out.right = resize_bilinear(s.right, h, w);
  out.disparity_left =
      map_opt(s.disparity_left, [&](const auto& d) { return resize_disparity(d, h, w, ratio); });
  out.disparity_right =
      map_opt(s.disparity_right, [&](const auto& d) { return resize_disparity(d, h, w, ratio); });
  out.nonoccluded = map_opt(s.nonoccluded, [&](const auto& m) { return resize_mask_nearest(m, h, w); });
  return out;
}

StereoSample scale(const StereoSample& s, const ScaleStep& cfg, Rng& rng, int min_height,
                   int min_width) {
  return apply_scale(s, draw_scale(cfg, rng, min_height, min_width));
}

// --- composition ----------------------------------------------------------------------

namespace {

// Applies one step, recording the parameters it drew.
StereoSample run_step(const AugmentStep& step, const StereoSample& s, Rng& rng,
                      const CropStep* crop, AppliedOp& log) {
  const AppliedOp params = std::visit(
      overloaded{
          [&](const CropStep& c) -> AppliedOp { return draw_crop(s, c.height, c.width, rng); },
          [&](const FlipStep& f) -> AppliedOp { return FlipParams{f.kind, rng.bernoulli(f.prob)}; },
          [&](const ColorStep& c) -> AppliedOp { return draw_color(c, rng); },
          [&](const EraseStep& e) -> AppliedOp { return draw_erase(s, e, rng); },
          [&](const ScaleStep& sc) -> AppliedOp {
            return draw_scale(sc, rng, crop ? crop->height : 0, crop ? crop->width : 0);
          },
      },
      step);
  log = params;
  return replay(s, {params});
}

}  // namespace

AugmentedSample compose(const std::vector<AugmentStep>& pipeline, const StereoSample& s,
                        std::uint64_t seed) {
  const CropStep* crop = nullptr;
  for (const AugmentStep& step : pipeline) {
    validate_step(step);
    if (!crop) crop = std::get_if<CropStep>(&step);
  }
  Rng rng(derive_seed(seed, s.id));
  AugmentedSample out;
  out.sample = s;
  for (const AugmentStep& step : pipeline) {
    AppliedOp log;
    out.sample = run_step(step, out.sample, rng, crop, log);
    out.applied_ops.push_back(std::move(log));
  }
  return out;
}

StereoSample replay(const StereoSample& s, const std::vector<AppliedOp>& ops) {
  StereoSample out = s;
  for (const AppliedOp& op : ops) {
    out = std::visit(overloaded{
                         [&](const CropParams& p) { return apply_crop(out, p); },
                         [&](const FlipParams& p) {
                           if (!p.applied) return out;
                           switch (p.kind) {
                             case FlipKind::kHorizontal: return hflip(out);
                             case FlipKind::kVertical: return vflip(out);
                             case FlipKind::kHorizontalSwap: return hsflip(out);
                           }
                           return out;
                         },
                         [&](const ColorParams& p) { return apply_color(out, p); },
                         [&](const EraseParams& p) { return apply_erase(out, p); },
                         [&](const ScaleParams& p) { return apply_scale(out, p); },
                     },
                     op);
  }
  return out;
}

}  // namespace stereobench
