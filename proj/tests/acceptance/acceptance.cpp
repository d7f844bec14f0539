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

// Release acceptance checks. Prints one PASS/FAIL line per criterion and
// exits non-zero when any criterion fails.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "stereobench/aggregation.hpp"
#include "stereobench/augment.hpp"
#include "stereobench/codecs.hpp"
#include "stereobench/cost_volume.hpp"
#include "stereobench/dataset.hpp"
#include "stereobench/disparity.hpp"
#include "stereobench/error.hpp"
#include "stereobench/harness.hpp"
#include "stereobench/metrics.hpp"
#include "stereobench/synthetic.hpp"

namespace fs = std::filesystem;
using namespace stereobench;

namespace {

// Collects failed checks for one criterion.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    failed_ += !ok;
  }
  bool ok() const { return failed_ == 0; }
  std::string summary() const {
    std::ostringstream os;
    os << checks_ << " checks";
    if (failed_) {
      os << ", " << failed_ << " failed:";
      for (const auto& f : failures_) os << " [" << f << "]";
    }
    return os.str();
  }

 private:
  std::size_t checks_ = 0, failed_ = 0;
  std::vector<std::string> failures_;
};

struct Outcome {
  bool ok = true;
  std::string detail;
};

class ScratchDir {
 public:
  explicit ScratchDir(const std::string& tag) {
    std::random_device rd;
    path_ = fs::temp_directory_path() / ("stereobench_accept_" + tag + "_" + std::to_string(rd()));
    fs::create_directories(path_);
  }
  ~ScratchDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

bool same_bits(float a, float b) {
  return std::bit_cast<std::uint32_t>(a) == std::bit_cast<std::uint32_t>(b);
}

bool close_rel(double a, double b, double rel) {
  return std::fabs(a - b) <= rel * std::max({1.0, std::fabs(a), std::fabs(b)});
}

std::string bytes_of(const fs::path& p) {
  const Bytes b = read_file(p);
  return std::string(b.begin(), b.end());
}

// --- 1: codecs ---------------------------------------------------------------

Outcome codecs() {
  Checker c;
  std::mt19937 gen(1);
  std::uniform_int_distribution<int> dim(1, 48);
  std::uniform_real_distribution<float> val(-1e4f, 1e4f);
  for (int i = 0; i < 1000; ++i) {
    FloatArray a;
    a.height = dim(gen);
    a.width = dim(gen);
    a.channels = i % 3 == 0 ? 3 : 1;
    a.data.resize(static_cast<std::size_t>(a.height) * a.width * a.channels);
    for (float& v : a.data) v = val(gen);
    const bool little = i % 2 == 0;
    const PfmData back = read_pfm(write_pfm(a, little));
    bool exact = back.array.height == a.height && back.array.width == a.width &&
                 back.array.channels == a.channels;
    for (std::size_t k = 0; exact && k < a.data.size(); ++k)
      exact = same_bits(back.array.data[k], a.data[k]);
    c.expect(exact, "pfm round trip " + std::to_string(i));
  }

  std::uniform_int_distribution<int> u16(0, 65535);
  for (int i = 0; i < 100; ++i) {
    Raster r{dim(gen), dim(gen), 1, 16, {}};
    r.samples.resize(static_cast<std::size_t>(r.height) * r.width);
    for (auto& s : r.samples) s = static_cast<std::uint16_t>(u16(gen));
    const Bytes png = write_png(r);
    const Bytes again = write_kitti_disparity_png(read_kitti_disparity_png(png));
    c.expect(read_png(again) == r, "kitti decode/encode identity " + std::to_string(i));
  }

  std::uniform_real_distribution<float> disp(0.0f, 255.0f);
  std::bernoulli_distribution valid(0.7);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    DisparityMap d(dim(gen), dim(gen));
    for (int y = 0; y < d.height(); ++y)
      for (int x = 0; x < d.width(); ++x) {
        d.at(y, x) = disp(gen);
        d.set_valid(y, x, valid(gen));
      }
    const DisparityMap back = read_kitti_disparity_png(write_kitti_disparity_png(d));
    for (int y = 0; y < d.height(); ++y)
      for (int x = 0; x < d.width(); ++x) {
        if (!d.valid(y, x)) {
          c.expect(!back.valid(y, x), "invalid pixel stays invalid");
          continue;
        }
        // Values below 1/256 encode to the invalid marker by convention.
        if (d.at(y, x) < 1.0f / 256) continue;
        worst = std::max(worst, std::fabs(double{back.at(y, x)} - d.at(y, x)));
      }
  }
  c.expect(worst <= 1.0 / 512, "kitti encode/decode error " + std::to_string(worst));
  return {c.ok(), c.summary() + ", max kitti error " + std::to_string(worst)};
}

// --- 2: metric oracles -------------------------------------------------------

Outcome metric_oracles() {
  Checker c;
  std::mt19937 gen(2);
  std::uniform_int_distribution<int> dim(1, 64);
  std::uniform_real_distribution<float> disp(0.0f, 64.0f);
  std::bernoulli_distribution keep(0.8);
  for (int i = 0; i < 200; ++i) {
    const int h = dim(gen), w = dim(gen);
    DisparityMap est(h, w), gt(h, w);
    ValidMask region(h, w, true);
    for (int y = 0; y < h; ++y)
      for (int x = 0; x < w; ++x) {
        est.at(y, x) = disp(gen);
        gt.at(y, x) = disp(gen);
        gt.set_valid(y, x, keep(gen));
        region.set(y, x, keep(gen));
      }
    double sum = 0;
    std::size_t n = 0, b1 = 0, b3 = 0;
    for (int y = 0; y < h; ++y)
      for (int x = 0; x < w; ++x) {
        if (!est.valid(y, x) || !gt.valid(y, x) || !region(y, x)) continue;
        const double e = std::fabs(double{est.at(y, x)} - double{gt.at(y, x)});
        sum += e;
        b1 += e > 1.0;
        b3 += e > 3.0;
        ++n;
      }
    if (n == 0) {
      bool thrown = false;
      try {
        epe(est, gt, &region);
      } catch (const Error& e) {
        thrown = e.code() == ErrorCode::kEmptyValidSet;
      }
      c.expect(thrown, "empty valid set raises");
      continue;
    }
    c.expect(close_rel(epe(est, gt, &region), sum / n, 1e-6), "epe triple " + std::to_string(i));
    c.expect(close_rel(bad_tau(est, gt, 1.0, &region), 100.0 * b1 / n, 1e-6),
             "bad_1 triple " + std::to_string(i));
    c.expect(close_rel(bad_tau(est, gt, 3.0, &region), 100.0 * b3 / n, 1e-6),
             "bad_3 triple " + std::to_string(i));
  }

  DisparityMap gt(1, 4, 10.0f), est(1, 4, 10.0f);
  est.at(0, 1) = 11.0f;
  est.at(0, 2) = 8.0f;
  est.at(0, 3) = 17.0f;
  c.expect(epe(est, gt) == 2.5, "hand epe 2.5");
  c.expect(bad_tau(est, gt, 3.0) == 25.0, "hand bad_3 25.0");
  c.expect(bad_tau(est, gt, 1.0) == 50.0, "hand bad_1 50.0");
  return {c.ok(), c.summary()};
}

// --- 3: cost-volume algebra --------------------------------------------------

FeatureMap signed_features(int ch, int h, int w, std::mt19937& gen) {
  std::bernoulli_distribution bit(0.5);
  FeatureMap f(ch, h, w);
  for (float& v : f.data()) v = bit(gen) ? 1.0f : -1.0f;
  return f;
}

FeatureMap shift_right_view(const FeatureMap& left, int delta, std::mt19937& gen) {
  // fr(x) = fl(x + delta), so left pixel x matches right pixel x - delta.
  FeatureMap r = signed_features(left.channels(), left.height(), left.width(), gen);
  for (int ch = 0; ch < left.channels(); ++ch)
    for (int y = 0; y < left.height(); ++y)
      for (int x = 0; x + delta < left.width(); ++x) r.at(ch, y, x) = left.at(ch, y, x + delta);
  return r;
}

Outcome cost_algebra() {
  Checker c;
  std::mt19937 gen(3);
  std::uniform_real_distribution<float> val(-1.0f, 1.0f);
  for (int i = 0; i < 10; ++i) {
    FeatureMap l(16, 12, 30), r(16, 12, 30);
    for (float& v : l.data()) v = val(gen);
    for (float& v : r.data()) v = val(gen);
    CostConfig cfg;
    cfg.max_disparity = 10;
    cfg.groups = 1;
    const CostVolume corr = build_correlation(l, r, cfg);
    const CostVolume g1 = build_groupwise(l, r, cfg);
    bool exact = corr.size() == g1.size();
    for (std::size_t k = 0; exact && k < corr.size(); ++k)
      exact = same_bits(corr.data()[k], g1.data()[k]);
    c.expect(exact, "gwc(G=1) == correlation bit-exact");

    for (int groups : {2, 4, 8, 16}) {
      cfg.groups = groups;
      const CostVolume gwc = build_groupwise(l, r, cfg);
      double worst = 0;
      for (int d = 0; d < 10; ++d)
        for (int y = 0; y < 12; ++y)
          for (int x = 0; x < 30; ++x) {
            double m = 0;
            for (int g = 0; g < groups; ++g) m += gwc.at(g, d, y, x);
            worst = std::max(worst, std::fabs(m / groups - corr.at(0, d, y, x)));
          }
      c.expect(worst <= 1e-6, "gwc group mean vs correlation, G=" + std::to_string(groups));
    }
  }

  const int h = 16, w = 48, dmax = 12;
  for (int delta = 0; delta <= 7; ++delta) {
    const FeatureMap l = signed_features(32, h, w, gen);
    const FeatureMap r = shift_right_view(l, delta, gen);
    CostConfig cfg;
    cfg.max_disparity = dmax;
    cfg.groups = 4;
    const CostVolume diff = build_difference(l, r, cfg);
    bool zero = true;
    for (int y = 0; y < h; ++y)
      for (int x = delta; x + delta < w; ++x) zero = zero && diff.at(0, delta, y, x) == 0.0f;
    c.expect(zero, "difference zero at shift " + std::to_string(delta));

    for (CostKind kind : {CostKind::kDifference, CostKind::kCorrelation, CostKind::kGroupwise}) {
      cfg.kind = kind;
      const DisparityMap d = wta(reduce_groups(build_volume(l, r, cfg)));
      std::size_t hit = 0, total = 0;
      for (int y = 0; y < h; ++y)
        for (int x = dmax - 1; x + delta < w; ++x) {
          ++total;
          hit += d.at(y, x) == static_cast<float>(delta);
        }
      c.expect(hit == total, std::string(cost_kind_name(kind)) + " recovers shift " +
                                 std::to_string(delta) + ": " + std::to_string(hit) + "/" +
                                 std::to_string(total));
    }
  }
  return {c.ok(), c.summary()};
}

// --- 4: SGM identities -------------------------------------------------------

CostVolume random_volume(int d, int h, int w, std::mt19937& gen) {
  std::uniform_real_distribution<float> val(0.0f, 1.0f);
  CostVolume v = allocate_volume(1, d, h, w);
  v.set_roles({GroupRole::kCost});
  for (float& x : v.data()) x = val(gen);
  return v;
}

Outcome sgm_identities() {
  Checker c;
  std::mt19937 gen(4);
  std::uniform_int_distribution<int> dim(1, 24);
  for (int i = 0; i < 50; ++i) {
    const CostVolume v = random_volume(dim(gen), dim(gen), dim(gen), gen);
    SgmConfig cfg;
    cfg.p1 = cfg.p2 = 0.0f;
    cfg.paths = i % 2 ? 4 : 8;
    const CostVolume s = sgm_aggregate(v, cfg);
    bool exact = s.same_shape(v);
    for (std::size_t k = 0; exact && k < v.size(); ++k)
      exact = s.data()[k] == static_cast<float>(cfg.paths) * v.data()[k];
    c.expect(exact, "P=0 gives paths x C, volume " + std::to_string(i));

    const float p1 = 0.1f + 0.01f * (i % 7), p2 = p1 * 3.0f;
    for (const PathDirection& dir : sgm_directions(8)) {
      const CostVolume l = sgm_path(v, dir, p1, p2);
      bool bounded = true;
      for (std::size_t k = 0; k < v.size(); ++k) {
        const double up = double{l.data()[k]} - v.data()[k];
        bounded = bounded && up >= -1e-6 && up <= p2 + 1e-6;
      }
      c.expect(bounded, "uplift in [0, P2], volume " + std::to_string(i));
    }
  }

  CostVolume v = allocate_volume(1, 2, 1, 2);
  v.set_roles({GroupRole::kCost});
  v.at(0, 0, 0) = 0.0f;
  v.at(1, 0, 0) = 5.0f;
  v.at(0, 0, 1) = 3.0f;
  v.at(1, 0, 1) = 1.0f;
  const CostVolume l = sgm_path(v, {0, 1}, 1.0f, 2.0f);
  c.expect(l.at(0, 0, 0) == 0.0f && l.at(1, 0, 0) == 5.0f, "1x2 first pixel");
  c.expect(l.at(0, 0, 1) == 3.0f && l.at(1, 0, 1) == 2.0f, "1x2 recurrence");
  return {c.ok(), c.summary()};
}

// --- 5: regression -----------------------------------------------------------

Outcome regression() {
  Checker c;
  std::mt19937 gen(5);
  for (int i = 0; i < 20; ++i) {
    const int d = 2 + i * 3;
    const CostVolume v = random_volume(d, 9, 11, gen);
    const DisparityMap s = soft_argmin(v, 0.25f + 0.1f * i);
    bool in_range = true;
    for (float x : s.values()) in_range = in_range && x >= 0.0f && x <= d - 1.0f;
    c.expect(in_range, "soft_argmin in [0, D-1], D=" + std::to_string(d));

    CostVolume flat = allocate_volume(1, d, 2, 3);
    flat.set_roles({GroupRole::kCost});
    for (float& x : flat.data()) x = 0.375f;
    bool centre = true;
    const DisparityMap mid = soft_argmin(flat);
    for (float x : mid.values()) centre = centre && x == (d - 1) / 2.0f;
    c.expect(centre, "uniform cost gives (D-1)/2, D=" + std::to_string(d));
  }

  std::uniform_real_distribution<float> val(0.1f, 1.0f);
  std::uniform_int_distribution<int> pick(0, 31);
  CostVolume v = allocate_volume(1, 32, 20, 20);
  v.set_roles({GroupRole::kCost});
  for (int y = 0; y < 20; ++y)
    for (int x = 0; x < 20; ++x) {
      for (int d = 0; d < 32; ++d) v.at(d, y, x) = val(gen);
      v.at(pick(gen), y, x) = 0.0f;  // unique minimum, gap >= 0.1
    }
  const DisparityMap soft = soft_argmin(v, 1e-3f);
  const DisparityMap hard = wta(v);
  double worst = 0;
  for (std::size_t k = 0; k < soft.values().size(); ++k)
    worst = std::max(worst, std::fabs(double{soft.values()[k]} - hard.values()[k]));
  c.expect(worst <= 0.01, "t=1e-3 vs wta: " + std::to_string(worst));

  CostVolume p = allocate_volume(1, 6, 1, 1);
  p.set_roles({GroupRole::kCost});
  const float costs[] = {9, 9, 4, 1, 2, 9};
  for (int d = 0; d < 6; ++d) p.at(d, 0, 0) = costs[d];
  c.expect(parabola_subpixel(p, wta(p)).at(0, 0) == 3.25f, "parabola (4,1,2) at 3 -> 3.25");
  return {c.ok(), c.summary()};
}

// --- 6: augmentation ---------------------------------------------------------

StereoSample random_sample(int h, int w, std::mt19937& gen) {
  std::uniform_int_distribution<int> px(0, 255);
  std::uniform_real_distribution<float> disp(0.0f, 40.0f);
  std::bernoulli_distribution keep(0.9);
  StereoSample s;
  s.id = "rand";
  s.left = Image(h, w, 3);
  s.right = Image(h, w, 3);
  for (float& v : s.left.data()) v = static_cast<float>(px(gen));
  for (float& v : s.right.data()) v = static_cast<float>(px(gen));
  DisparityMap dl(h, w), dr(h, w);
  ValidMask noc(h, w, true);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      dl.at(y, x) = disp(gen);
      dr.at(y, x) = disp(gen);
      dl.set_valid(y, x, keep(gen));
      noc.set(y, x, keep(gen));
    }
  s.disparity_left = dl;
  s.disparity_right = dr;
  s.nonoccluded = noc;
  return s;
}

// Smooth texture with a dense constant-disparity ground truth.
StereoSample dense_pair(int h, int w, float d, double phase) {
  StereoSample s;
  s.id = "dense";
  s.left = Image(h, w, 1);
  s.right = Image(h, w, 1);
  auto f = [&](double y, double x) {
    return 127.5 + 60.0 * std::sin(x * 0.19 + phase) * std::cos(y * 0.13) +
           50.0 * std::sin((x + y) * 0.045);
  };
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      s.left.at(y, x) = static_cast<float>(f(y, x));
      s.right.at(y, x) = static_cast<float>(f(y, x + d));
    }
  s.disparity_left = DisparityMap(h, w, d);
  s.disparity_right = DisparityMap(h, w, d);
  return s;
}

double warp_median(const StereoSample& s) {
  std::vector<double> res;
  for (int y = 0; y < s.left.height(); ++y)
    for (int x = 0; x < s.left.width(); ++x) {
      const double xr = x - double{s.disparity_left->at(y, x)};
      const int x0 = static_cast<int>(std::floor(xr));
      if (x0 < 0 || x0 + 1 >= s.right.width()) continue;
      const double t = xr - x0;
      const double r = (1 - t) * s.right.at(y, x0) + t * s.right.at(y, x0 + 1);
      res.push_back(std::fabs(s.left.at(y, x) - r));
    }
  if (res.empty()) return INFINITY;
  std::nth_element(res.begin(), res.begin() + res.size() / 2, res.end());
  return res[res.size() / 2];
}

Outcome augmentation() {
  Checker c;
  std::mt19937 gen(6);
  for (int i = 0; i < 20; ++i) {
    StereoSample s = random_sample(17 + i, 31 + 2 * i, gen);
    c.expect(hflip(hflip(s)) == s, "hflip involution");
    c.expect(vflip(vflip(s)) == s, "vflip involution");
    s.nonoccluded.reset();  // the swap has no right-view occlusion mask to carry
    c.expect(hsflip(hsflip(s)) == s, "hsflip involution");
  }

  StereoSample s;
  s.left = Image(1, 3, 1, {1, 2, 3});
  s.right = Image(1, 3, 1, {1, 2, 3});
  s.disparity_left = DisparityMap(1, 3);
  for (int x = 0; x < 3; ++x) s.disparity_left->at(0, x) = static_cast<float>(x + 1);
  const DisparityMap f = *hflip(s).disparity_left;
  c.expect(f.at(0, 0) == -3.0f && f.at(0, 1) == -2.0f && f.at(0, 2) == -1.0f,
           "hflip sign rule [1,2,3] -> [-3,-2,-1]");

  double worst = 0;
  for (int i = 0; i < 20; ++i) {
    const StereoSample p = dense_pair(96, 160, 3.0f + i % 5, 0.3 * i);
    ScaleParams sp;
    sp.sx = 0.6 + 0.05 * i;
    sp.sy = i % 3 == 0 ? sp.sx * 1.1 : sp.sx;
    const double m = warp_median(apply_scale(p, sp));
    worst = std::max(worst, m);
  }
  c.expect(worst <= 2.0, "warp-consistency median after scale " + std::to_string(worst));

  const StereoSample base = dense_pair(120, 200, 6.0f, 0.0);
  const auto pipe = rc_ces_pipeline(64, 128);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const AugmentedSample a = compose(pipe, base, seed);
    const AugmentedSample b = compose(pipe, base, seed);
    c.expect(a.sample == b.sample && a.applied_ops == b.applied_ops, "compose determinism");
    c.expect(replay(base, a.applied_ops) == a.sample, "replay matches compose");
  }
  return {c.ok(), c.summary() + ", worst warp median " + std::to_string(worst)};
}

// --- 7 and 9: end to end on random-dot stereograms ---------------------------

RunConfig stereogram_run(const fs::path& data, const fs::path& out) {
  RunConfig cfg;
  cfg.data.dataset = Dataset::kKitti2015;
  cfg.data.root = data;
  cfg.pipeline.feature.kind = FeatureKind::kCensus;
  cfg.pipeline.feature.window = 5;
  cfg.pipeline.feature.scale = 1;
  cfg.pipeline.cost.kind = CostKind::kGroupwise;
  cfg.pipeline.cost.groups = 4;
  cfg.pipeline.cost.max_disparity = 48;
  cfg.pipeline.aggregate.method = AggregateMethod::kSgm;
  cfg.pipeline.aggregate.sgm.paths = 8;
  cfg.pipeline.regress.kind = RegressionKind::kWtaParabola;
  cfg.pipeline.refine.lr_check = true;
  cfg.eval.epe = true;
  cfg.eval.bad_thresholds = {3.0};
  cfg.eval.mask = MaskMode::kNoc;
  cfg.output.dir = out;
  cfg.output.save_disparity = true;
  return cfg;
}

void write_stereograms(const fs::path& root) {
  std::vector<StereoSample> samples;
  StereogramConfig sc;  // 256 x 256, integer disparities up to 32
  sc.seed = 2024;
  for (int i = 0; i < 10; ++i) {
    char id[16];
    std::snprintf(id, sizeof id, "%06d_10", i);
    samples.push_back(random_dot_stereogram(sc, id));
  }
  write_kitti2015_tree(root, samples);
}

Outcome end_to_end(const fs::path& scratch, double& seconds) {
  Checker c;
  write_stereograms(scratch / "data");
  const auto t0 = std::chrono::steady_clock::now();
  const RunResult r = run(stereogram_run(scratch / "data", scratch / "t1"), RunOptions{1, nullptr});
  seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  c.expect(r.failed == 0, "no failed samples");
  if (!r.report) return {false, "no report"};
  const double e = *r.report->pixel_weighted.epe;
  const double b = r.report->pixel_weighted.bad[0];
  c.expect(r.report->rows.size() == 10, "10 evaluated pairs");
  c.expect(e <= 1.0, "EPE " + std::to_string(e) + " <= 1.0");
  c.expect(b <= 5.0, "bad_3 " + std::to_string(b) + "% <= 5%");
  c.expect(seconds < 60.0, "runtime " + std::to_string(seconds) + " s < 60 s");
  std::ostringstream os;
  os << "EPE " << e << " px, bad_3 " << b << "% on " << r.report->total_pixels
     << " noc pixels, " << seconds << " s; " << c.summary();
  return {c.ok(), os.str()};
}

Outcome determinism(const fs::path& scratch) {
  Checker c;
  for (int threads : {4, 2}) {
    const fs::path out = scratch / ("t" + std::to_string(threads));
    run(stereogram_run(scratch / "data", out), RunOptions{threads, nullptr});
    for (const char* f : {"per_sample.csv", "summary.csv"})
      c.expect(bytes_of(scratch / "t1" / f) == bytes_of(out / f),
               std::string(f) + " at threads=" + std::to_string(threads));
    for (const auto& e : fs::directory_iterator(scratch / "t1" / "disparity")) {
      const fs::path other = out / "disparity" / e.path().filename();
      c.expect(fs::exists(other) && bytes_of(e.path()) == bytes_of(other),
               e.path().filename().string() + " at threads=" + std::to_string(threads));
    }
  }
  return {c.ok(), c.summary()};
}

// --- 8: dataset smoke --------------------------------------------------------

struct DatasetRoot {
  Dataset dataset;
  const char* env;
  fs::path root;
  bool real = false;
};

std::vector<StereoSample> tiny_stereograms(int n, bool kitti_ids, std::uint64_t seed) {
  StereogramConfig sc;
  sc.height = 32;
  sc.width = 64;
  sc.max_disparity = 8;
  sc.min_object_size = 6;
  sc.max_object_size = 20;
  sc.seed = seed;
  std::vector<StereoSample> out;
  for (int i = 0; i < n; ++i) {
    char id[32];
    std::snprintf(id, sizeof id, kitti_ids ? "%06d_10" : "scene_%03d", i);
    out.push_back(random_dot_stereogram(sc, id));
  }
  return out;
}

Outcome dataset_smoke(const fs::path& scratch) {
  Checker c;
  std::vector<DatasetRoot> roots = {
      {Dataset::kSceneFlow, "STEREOBENCH_SCENEFLOW_ROOT", {}},
      {Dataset::kKitti2015, "STEREOBENCH_KITTI2015_ROOT", {}},
      {Dataset::kMiddlebury, "STEREOBENCH_MIDDLEBURY_ROOT", {}},
      {Dataset::kEth3d, "STEREOBENCH_ETH3D_ROOT", {}},
  };
  std::string sources;
  for (DatasetRoot& r : roots) {
    if (const char* env = std::getenv(r.env); env && *env && fs::is_directory(env)) {
      r.root = env;
      r.real = true;
    } else {
      // Official training-split sizes on fabricated trees.
      r.root = scratch / std::string(dataset_name(r.dataset));
      const int n = r.dataset == Dataset::kKitti2015 ? 200 : r.dataset == Dataset::kEth3d ? 27 : 3;
      write_dataset_tree(r.dataset, r.root, tiny_stereograms(n, r.dataset == Dataset::kKitti2015, 7));
    }
    sources += std::string(sources.empty() ? "" : ", ") + std::string(dataset_name(r.dataset)) +
               (r.real ? "=real" : "=fabricated");
  }

  ManifestRequest kreq;
  kreq.dataset = Dataset::kKitti2015;
  kreq.root = roots[1].root;
  DatasetManifest kitti = build_manifest(kreq);
  c.expect(kitti.size() == 200, "KITTI2015 train pairs: " + std::to_string(kitti.size()));
  ManifestRequest ereq;
  ereq.dataset = Dataset::kEth3d;
  ereq.root = roots[3].root;
  c.expect(build_manifest(ereq).size() == 27,
           "ETH3D train pairs: " + std::to_string(build_manifest(ereq).size()));

  // Ground truth scored against itself, re-encoded as KITTI PNG estimates.
  kitti.entries.resize(std::min<std::size_t>(kitti.entries.size(), 20));
  for (std::size_t i = 0; i < kitti.size(); ++i) {
    const StereoSample s = load_sample(kitti, i);
    save_disparity(scratch / "gt_as_est" / (s.id + ".png"), *s.disparity_left);
  }
  const EvalReport self = eval_only(scratch / "gt_as_est", kitti, MetricSpec{});
  c.expect(*self.pixel_weighted.epe == 0.0, "GT-vs-GT epe " + std::to_string(*self.pixel_weighted.epe));

  CrossDomainPlan plan;
  plan.pipeline.feature.scale = 1;
  plan.pipeline.cost.max_disparity = 16;
  plan.pipeline.cost.groups = 4;
  plan.output.dir = scratch / "cross";
  for (const DatasetRoot& r : roots) {
    CrossDomainTarget t;
    t.dataset = r.dataset;
    t.root = r.root;
    t.limit = 2;
    if (r.dataset == Dataset::kMiddlebury) t.variant = "half";
    if (r.dataset == Dataset::kSceneFlow) t.variant = "clean";
    plan.targets.push_back(t);
  }
  if (roots[0].real || roots[1].real || roots[2].real || roots[3].real) {
    plan.pipeline.feature.scale = 4;
    plan.pipeline.cost.max_disparity = 48;
  }
  const CrossDomainResult cd = cross_domain(plan);
  c.expect(cd.rows.size() == 4, "cross-domain rows: " + std::to_string(cd.rows.size()));
  const double expected_tau[] = {3.0, 3.0, 2.0, 1.0};
  for (std::size_t i = 0; i < cd.rows.size() && i < 4; ++i) {
    c.expect(cd.rows[i].dataset == roots[i].dataset, "row order");
    c.expect(cd.rows[i].threshold == expected_tau[i], "row threshold");
    c.expect(cd.rows[i].epe.has_value() && cd.rows[i].bad.has_value(), "row metrics present");
  }
  c.expect(!cd.rows.empty() && cd.rows[2].variant == "half", "Middlebury at half resolution");
  return {c.ok(), "[" + sources + "] " + c.summary()};
}

// --- driver --------------------------------------------------------------------

struct Criterion {
  int id;
  const char* name;
  double limit_s;  // 0 = no limit
  std::function<Outcome()> fn;
};

}  // namespace

int main() {
  ScratchDir e2e("e2e"), smoke("smoke");
  double e2e_seconds = 0;
  const std::vector<Criterion> criteria = {
      {1, "codec exactness", 30, codecs},
      {2, "metric oracles", 10, metric_oracles},
      {3, "cost-volume algebra", 60, cost_algebra},
      {4, "SGM identities", 60, sgm_identities},
      {5, "regression properties", 10, regression},
      {6, "augmentation suite", 30, augmentation},
      {7, "end-to-end synthetic bar", 0, [&] { return end_to_end(e2e.path(), e2e_seconds); }},
      {8, "dataset smoke", 0, [&] { return dataset_smoke(smoke.path()); }},
      {9, "determinism across threads", 0, [&] { return determinism(e2e.path()); }},
  };
  int failures = 0;
  for (const Criterion& cr : criteria) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      o = cr.fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (cr.limit_s > 0 && s >= cr.limit_s) {
      o.ok = false;
      o.detail += "; exceeded " + std::to_string(cr.limit_s) + " s";
    }
    failures += !o.ok;
    std::printf("%s criterion %d (%s): %s [%.2f s]\n", o.ok ? "PASS" : "FAIL", cr.id, cr.name,
                o.detail.c_str(), s);
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
