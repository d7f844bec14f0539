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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "stereobench/metrics.hpp"
#include "test_util.hpp"

namespace stereobench {
namespace {

// 1x4 maps with absolute errors {0, 1, 2, 7}.
struct Fixture {
  DisparityMap gt{1, 4, 10.0f};
  DisparityMap est{1, 4, 10.0f};
  Fixture() {
    est.at(0, 1) = 11.0f;
    est.at(0, 2) = 8.0f;
    est.at(0, 3) = 17.0f;
  }
};

TEST(Epe, ZeroForPerfectEstimate) {
  const DisparityMap gt(3, 3, 4.0f);
  EXPECT_EQ(epe(gt, gt), 0.0);
}

TEST(Epe, MeanAbsoluteError) {
  Fixture f;
  EXPECT_DOUBLE_EQ(epe(f.est, f.gt), 2.5);
}

TEST(Epe, EmptyValidSetThrows) {
  const DisparityMap est(2, 2, 1.0f), gt(2, 2, 1.0f, false);
  EXPECT_ERROR_CODE(epe(est, gt), ErrorCode::kEmptyValidSet);
}

TEST(BadTau, StrictThreshold) {
  Fixture f;
  EXPECT_DOUBLE_EQ(bad_tau(f.est, f.gt, 3.0), 25.0);
  EXPECT_DOUBLE_EQ(bad_tau(f.est, f.gt, 1.0), 50.0);
  EXPECT_DOUBLE_EQ(bad_tau(f.est, f.gt, 7.0), 0.0);
}

TEST(BadTau, MonotoneInThreshold) {
  std::mt19937 gen(31);
  std::uniform_real_distribution<float> dist(0, 20);
  DisparityMap est(10, 10), gt(10, 10);
  for (float& v : est.values()) v = dist(gen);
  for (float& v : gt.values()) v = dist(gen);
  double prev = 101.0;
  for (double tau : {0.5, 1.0, 2.0, 3.0, 5.0, 10.0}) {
    const double b = bad_tau(est, gt, tau);
    EXPECT_LE(b, prev);
    prev = b;
  }
}

TEST(Metrics, MatchScalarOracleAndPermutationInvariance) {
  std::mt19937 gen(32);
  std::uniform_real_distribution<float> dist(0, 40);
  std::bernoulli_distribution invalid(0.2);
  const int n = 300;
  DisparityMap est(1, n), gt(1, n);
  for (int x = 0; x < n; ++x) {
    est.at(0, x) = dist(gen);
    gt.at(0, x) = dist(gen);
    if (invalid(gen)) gt.set_valid(0, x, false);
  }
  double sum = 0;
  int count = 0, bad = 0;
  for (int x = 0; x < n; ++x)
    if (gt.valid(0, x)) {
      const double e = std::fabs(double{est.at(0, x)} - gt.at(0, x));
      sum += e;
      bad += e > 3.0;
      ++count;
    }
  EXPECT_NEAR(epe(est, gt), sum / count, 1e-9);
  EXPECT_NEAR(bad_tau(est, gt, 3.0), 100.0 * bad / count, 1e-9);

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), gen);
  DisparityMap pe(1, n), pg(1, n);
  for (int x = 0; x < n; ++x) {
    pe.at(0, x) = est.at(0, perm[x]);
    pg.at(0, x) = gt.at(0, perm[x]);
    pg.set_valid(0, x, gt.valid(0, perm[x]));
  }
  EXPECT_NEAR(epe(pe, pg), epe(est, gt), 1e-9);
  EXPECT_DOUBLE_EQ(bad_tau(pe, pg, 3.0), bad_tau(est, gt, 3.0));
}

TEST(Metrics, RegionRestrictsTheValidSet) {
  Fixture f;
  ValidMask noc(1, 4, true);
  noc.set(0, 3, false);
  EXPECT_DOUBLE_EQ(epe(f.est, f.gt, &noc), 1.0);
}

TEST(Metrics, FlippedEstimateIsRejected) {
  DisparityMap est(2, 2, 1.0f);
  est.set_negative_disparity(true);
  EXPECT_ERROR_CODE(epe(est, DisparityMap(2, 2, 1.0f)), ErrorCode::kPrecondition);
}

TEST(Metrics, ShapeMismatchIsRejected) {
  EXPECT_ERROR_CODE(epe(DisparityMap(2, 2), DisparityMap(2, 3)),
                    ErrorCode::kShapeMismatch);
}

TEST(Metrics, OfficialD1NeedsRelativeError) {
  DisparityMap gt(1, 2, 100.0f), est(1, 2, 100.0f);
  est.at(0, 0) = 104.0f;  // > 3 px but only 4 %
  est.at(0, 1) = 90.0f;   // > 3 px and 10 %
  EXPECT_DOUBLE_EQ(d1_official(est, gt), 50.0);
  EXPECT_DOUBLE_EQ(bad_tau(est, gt, 3.0), 100.0);
}

TEST(MetricSpec, DatasetDefaults) {
  EXPECT_EQ(MetricSpec::for_dataset(Dataset::kKitti2015).bad_thresholds,
            std::vector<double>{3.0});
  EXPECT_EQ(MetricSpec::for_dataset(Dataset::kEth3d).bad_thresholds,
            std::vector<double>{1.0});
  EXPECT_EQ(MetricSpec::for_dataset(Dataset::kMiddlebury).bad_thresholds,
            std::vector<double>{2.0});
  EXPECT_TRUE(MetricSpec::for_dataset(Dataset::kKitti2015).epe);
}

TEST(MetricSpec, RejectsNonPositiveThresholds) {
  MetricSpec s;
  s.bad_thresholds = {3.0, 0.0};
  EXPECT_ERROR_CODE(s.validate(), ErrorCode::kConfig);
}

MetricRow row(std::string id, std::size_t n, double e, double b) {
  MetricRow r;
  r.id = std::move(id);
  r.valid_pixels = n;
  r.epe = e;
  r.bad = {b};
  return r;
}

TEST(Aggregate, PixelWeightedVersusSampleMean) {
  MetricSpec spec;
  spec.bad_thresholds = {3.0};
  const EvalReport rep = aggregate({row("a", 10, 1.0, 10.0), row("b", 30, 3.0, 30.0)}, spec);
  EXPECT_DOUBLE_EQ(*rep.pixel_weighted.epe, 2.5);
  EXPECT_DOUBLE_EQ(*rep.sample_mean.epe, 2.0);
  EXPECT_DOUBLE_EQ(rep.pixel_weighted.bad[0], 25.0);
  EXPECT_DOUBLE_EQ(rep.sample_mean.bad[0], 20.0);
  EXPECT_EQ(rep.total_pixels, 40u);
}

TEST(Aggregate, SingleRowAndEqualCountsAgree) {
  MetricSpec spec;
  spec.bad_thresholds = {3.0};
  const EvalReport one = aggregate({row("a", 7, 1.5, 4.0)}, spec);
  EXPECT_DOUBLE_EQ(*one.pixel_weighted.epe, 1.5);
  EXPECT_DOUBLE_EQ(*one.sample_mean.epe, 1.5);
  const EvalReport eq = aggregate({row("a", 5, 1.0, 0.0), row("b", 5, 2.0, 10.0)}, spec);
  EXPECT_DOUBLE_EQ(*eq.pixel_weighted.epe, *eq.sample_mean.epe);
}

TEST(Aggregate, NoRowsThrows) {
  EXPECT_ERROR_CODE(aggregate({}, MetricSpec{}), ErrorCode::kEmptyValidSet);
}

TEST(EvaluateSample, NocModeUsesTheMask) {
  Fixture f;
  MetricSpec spec;
  spec.bad_thresholds = {1.0};
  spec.mask = MaskMode::kNoc;
  ValidMask noc(1, 4, true);
  noc.set(0, 3, false);
  const MetricRow r = evaluate_sample("x", f.est, f.gt, spec, &noc);
  EXPECT_EQ(r.valid_pixels, 3u);
  EXPECT_DOUBLE_EQ(*r.epe, 1.0);
  EXPECT_NEAR(r.bad[0], 100.0 / 3.0, 1e-9);
}

}  // namespace
}  // namespace stereobench
