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

#include "stereobench/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "stereobench/error.hpp"

namespace stereobench {

namespace {

struct ErrorSamples {
  std::vector<double> abs_err;
  std::vector<double> gt;
};

ErrorSamples gather(const DisparityMap& est, const DisparityMap& gt,
                    const ValidMask* region) {
  const ValidMask joint = joint_valid(est, gt, region);
  ErrorSamples s;
  const std::size_t n = joint.count();
  s.abs_err.reserve(n);
  s.gt.reserve(n);
  auto bits = joint.bits();
  auto ev = est.values();
  auto gv = gt.values();
  for (std::size_t i = 0; i < bits.size(); ++i)
    if (bits[i]) {
      s.abs_err.push_back(std::fabs(static_cast<double>(ev[i]) - gv[i]));
      s.gt.push_back(gv[i]);
    }
  if (s.abs_err.empty())
    raise(ErrorCode::kEmptyValidSet, "no jointly valid pixels to evaluate");
  return s;
}

double mean(const std::vector<double>& v) {
  return std::reduce(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double percent_above(const std::vector<double>& err, double tau) {
  const auto bad = std::count_if(err.begin(), err.end(), [tau](double e) { return e > tau; });
  return 100.0 * static_cast<double>(bad) / static_cast<double>(err.size());
}

double percent_d1(const ErrorSamples& s) {
  std::size_t bad = 0;
  for (std::size_t i = 0; i < s.abs_err.size(); ++i)
    if (s.abs_err[i] > 3.0 && s.abs_err[i] > 0.05 * std::fabs(s.gt[i])) ++bad;
  return 100.0 * static_cast<double>(bad) / static_cast<double>(s.abs_err.size());
}

}  // namespace

std::string_view mask_mode_name(MaskMode m) { return m == MaskMode::kAll ? "all" : "noc"; }

std::optional<MaskMode> parse_mask_mode(std::string_view s) {
  if (s == "all") return MaskMode::kAll;
  if (s == "noc") return MaskMode::kNoc;
  return std::nullopt;
}

void MetricSpec::validate() const {
  for (double t : bad_thresholds)
    if (!(t > 0.0)) raise(ErrorCode::kConfig, "eval.thresholds must all be > 0");
}

MetricSpec MetricSpec::for_dataset(Dataset d) {
  MetricSpec s;
  switch (d) {
    case Dataset::kKitti2012:
    case Dataset::kKitti2015: s.bad_thresholds = {3.0}; break;
    case Dataset::kMiddlebury: s.bad_thresholds = {2.0}; break;
    case Dataset::kEth3d: s.bad_thresholds = {1.0}; break;
    case Dataset::kSceneFlow: s.bad_thresholds = {1.0, 3.0}; break;
  }
  return s;
}

ValidMask joint_valid(const DisparityMap& est, const DisparityMap& gt,
                      const ValidMask* region) {
  if (est.height() != gt.height() || est.width() != gt.width())
    raise(ErrorCode::kShapeMismatch,
          "estimate " + std::to_string(est.height()) + "x" + std::to_string(est.width()) +
              " vs ground truth " + std::to_string(gt.height()) + "x" +
              std::to_string(gt.width()));
  if (region && (region->height() != gt.height() || region->width() != gt.width()))
    raise(ErrorCode::kShapeMismatch, "evaluation mask does not match ground truth");
  if (est.has_negative_disparity() || gt.has_negative_disparity())
    raise(ErrorCode::kPrecondition,
          "horizontally flipped (negative-disparity) maps cannot be evaluated");
  ValidMask out(gt.height(), gt.width(), false);
  auto o = out.bits();
  auto e = est.mask().bits();
  auto g = gt.mask().bits();
  for (std::size_t i = 0; i < o.size(); ++i)
    o[i] = (e[i] && g[i] && (!region || region->bits()[i])) ? 1 : 0;
  return out;
}

double epe(const DisparityMap& est, const DisparityMap& gt, const ValidMask* region) {
  return mean(gather(est, gt, region).abs_err);
}

double bad_tau(const DisparityMap& est, const DisparityMap& gt, double tau,
               const ValidMask* region) {
  if (!(tau > 0.0)) raise(ErrorCode::kInvalidArgument, "bad_tau threshold must be > 0");
  return percent_above(gather(est, gt, region).abs_err, tau);
}

double d1_official(const DisparityMap& est, const DisparityMap& gt, const ValidMask* region) {
  return percent_d1(gather(est, gt, region));
}

MetricRow evaluate_sample(std::string id, const DisparityMap& est, const DisparityMap& gt,
                          const MetricSpec& spec, const ValidMask* nonoccluded) {
  spec.validate();
  if (spec.mask == MaskMode::kNoc && !nonoccluded)
    raise(ErrorCode::kPrecondition, id + ": noc evaluation needs an occlusion mask");
  const ValidMask* region = spec.mask == MaskMode::kNoc ? nonoccluded : nullptr;
  const ErrorSamples s = gather(est, gt, region);
  MetricRow row;
  row.id = std::move(id);
  row.valid_pixels = s.abs_err.size();
  if (spec.epe) row.epe = mean(s.abs_err);
  for (double t : spec.bad_thresholds) row.bad.push_back(percent_above(s.abs_err, t));
  if (spec.d1_official) row.d1_official = percent_d1(s);
  return row;
}

EvalReport aggregate(std::vector<MetricRow> rows, const MetricSpec& spec) {
  if (rows.empty()) raise(ErrorCode::kEmptyValidSet, "no rows to aggregate");
  EvalReport r;
  r.spec = spec;
  const double n = static_cast<double>(rows.size());
  for (const MetricRow& row : rows) r.total_pixels += row.valid_pixels;
  const double total = static_cast<double>(r.total_pixels);

  auto fold = [&](auto get) {
    double weighted = 0.0, plain = 0.0;
    for (const MetricRow& row : rows) {
      const double v = get(row);
      weighted += v * static_cast<double>(row.valid_pixels);
      plain += v;
    }
    return std::pair{weighted / total, plain / n};
  };

  if (spec.epe) {
    auto [w, m] = fold([](const MetricRow& row) { return row.epe.value(); });
    r.pixel_weighted.epe = w;
    r.sample_mean.epe = m;
  }
  for (std::size_t k = 0; k < spec.bad_thresholds.size(); ++k) {
    auto [w, m] = fold([k](const MetricRow& row) { return row.bad.at(k); });
    r.pixel_weighted.bad.push_back(w);
    r.sample_mean.bad.push_back(m);
  }
  if (spec.d1_official) {
    auto [w, m] = fold([](const MetricRow& row) { return row.d1_official.value(); });
    r.pixel_weighted.d1_official = w;
    r.sample_mean.d1_official = m;
  }
  r.rows = std::move(rows);
  return r;
}

}  // namespace stereobench
