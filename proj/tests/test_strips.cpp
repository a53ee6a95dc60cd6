// Copyright 2026 The heis-strips Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "heis/error.hpp"
#include "heis/strips.hpp"
#include "support.hpp"

namespace heis {
namespace {

using testing::min_consecutive_slope;
using testing::random_pl;

TEST(Eta, Examples) {
  EXPECT_EQ(eta_of(Profile::constant(0), 0.7), 0.7);
  const Profile bp = Profile::broken_plane_alpha(1.0);
  EXPECT_DOUBLE_EQ(bp(0.25), -0.5);
  EXPECT_DOUBLE_EQ(eta_of(bp, 0.25), 0.0);
  EXPECT_DOUBLE_EQ(eta_of(Profile::linear(-1), 0.6), 0.3);
}

TEST(GraphicalStrip, Examples) {
  const Interval w{-2, 2};
  EXPECT_TRUE(is_graphical_strip(Profile::constant(0), w).ok);
  const StripVerdict bad = is_graphical_strip(Profile::linear(-3), w);
  EXPECT_FALSE(bad.ok);
  EXPECT_NEAR(bad.slope, -3.0, 1e-12);
  EXPECT_NE(bad.w1, bad.w2);
  EXPECT_TRUE(is_graphical_strip(Profile::broken_plane_alpha(1), w).ok);
}

TEST(GraphicalStrip, EtaMustReachTheWindow) {
  // eta(w) = w + atan(w) / 2 is onto; eta of a bounded sample list is not.
  const Profile p = Profile::samples({-1, 1}, {0, 0});
  const StripVerdict v = is_graphical_strip(p, {-5, 5});
  EXPECT_TRUE(v.ok);
  EXPECT_TRUE(is_graphical_strip(Profile::arctan(1, 1), {-50, 50}).ok);
}

TEST(AreaMinimizing, Examples) {
  const Interval w{-2, 2};
  EXPECT_TRUE(is_area_minimizing(Profile::constant(0.4), w).ok);
  const StripVerdict bp = is_area_minimizing(Profile::broken_plane_alpha(1), w);
  EXPECT_FALSE(bp.ok);
  EXPECT_NEAR(bp.slope, -2.0, 1e-12);
  EXPECT_GE(std::min(bp.w1, bp.w2), -0.5 - 1e-12);
  EXPECT_LE(std::max(bp.w1, bp.w2), 0.5 + 1e-12);
  EXPECT_TRUE(is_area_minimizing(Profile::linear(-1), w).ok);
  EXPECT_THROW(is_area_minimizing(Profile::linear(-3), w), DomainError);
}

TEST(SigmaAlpha, Examples) {
  const Profile s = alpha_to_sigma(Profile::constant(0.3), {-1, 1});
  EXPECT_DOUBLE_EQ(s(0.2), 0.3);
  const Profile s2 = alpha_to_sigma(Profile::linear(-1), {-1, 1});
  EXPECT_NEAR(s2(0.2), -0.4, 1e-14);
  const Profile s3 = alpha_to_sigma(Profile::linear(-1.5), {-1, 1});
  EXPECT_NEAR(s3(0.1), -0.6, 1e-14);
  const Profile back = sigma_to_alpha(s3, {-0.25, 0.25});
  for (double w : {-0.9, -0.3, 0.0, 0.4, 0.95}) {
    EXPECT_NEAR(back(w), -1.5 * w, 1e-9);
  }
}

TEST(SigmaAlpha, Errors) {
  EXPECT_THROW(alpha_to_sigma(Profile::broken_plane_alpha(1), {-1, 1}),
               DomainError);
  EXPECT_THROW(sigma_to_alpha(Profile::linear(2.0), {-1, 1}), DomainError);
}

TEST(SigmaAlpha, CriterionEquivalenceOnRandomProfiles) {
  std::mt19937_64 rng(41);
  int minimal = 0;
  for (int i = 0; i < 100; ++i) {
    const Profile sigma = random_pl(rng, -1, 1, 12, -3.0, 1.9);
    const Profile alpha = sigma_to_alpha(sigma, {-1, 1});
    const auto& w = alpha.abscissae();
    const Profile again = alpha_to_sigma(alpha, {w.front(), w.back()});
    for (int k = 0; k <= 200; ++k) {
      const double z = -1.0 + 2.0 * k / 200;
      ASSERT_NEAR(again(z), sigma(z), 1e-9);
    }
    const bool sigma_ok = min_consecutive_slope(sigma) >= -2.0;
    const StripVerdict v = is_area_minimizing(alpha, {-1, 1});
    EXPECT_EQ(v.ok, sigma_ok) << "profile " << i;
    if (sigma_ok) EXPECT_GE(min_consecutive_slope(alpha), -1.0 - 1e-9);
    minimal += v.ok;
  }
  // The draw must exercise both verdicts.
  EXPECT_GT(minimal, 0);
  EXPECT_LT(minimal, 100);
}

TEST(SigmaAlpha, AdmissibleAlphaGivesAdmissibleSigma) {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 100; ++i) {
    const Profile alpha = random_pl(rng, -1, 1, 10, -1.0, 6.0);
    const Profile sigma = alpha_to_sigma(alpha, {-1, 1});
    const double m = min_consecutive_slope(sigma);
    EXPECT_GE(m, -2.0 - 1e-9);
    const auto& t = sigma.abscissae();
    const auto& v = sigma.values();
    for (std::size_t k = 1; k < t.size(); ++k) {
      ASSERT_LT((v[k] - v[k - 1]) / (t[k] - t[k - 1]), 2.0);
    }
  }
}

TEST(BrokenPlane, FieldExamples) {
  const BrokenPlane b(1.0);
  EXPECT_EQ(b.b(1, 0), 0.0);
  EXPECT_EQ(b.b(0.5, 1), -0.5);
  EXPECT_DOUBLE_EQ(b.b(1, -0.3), 0.6);
  EXPECT_THROW(BrokenPlane(-1), DomainError);
}

TEST(BrokenPlane, ScaleInvariance) {
  std::mt19937_64 rng(47);
  std::uniform_real_distribution<double> d(-1, 1);
  const BrokenPlane b(1.3);
  for (double t : {0.5, 2.0, 7.0}) {
    const Similarity s = Similarity::dilation(t, t);
    for (int i = 0; i < 1000; ++i) {
      const V0Point u{d(rng), 2 * d(rng)};
      const GroupPoint p = graph_point(u, b.b(u.x, u.z));
      ASSERT_TRUE(b.contains(p, 1e-12));
      ASSERT_TRUE(b.contains(s.apply(p), 1e-9));
    }
  }
}

TEST(BrokenPlane, AlphaFieldMatchesClosedForm) {
  const ScalarField f = alpha_strip_field(Profile::broken_plane_alpha(1.0));
  const BrokenPlane b(1.0);
  for (double x : {-0.9, -0.2, 0.4, 1.0}) {
    for (double z : {-0.7, -0.05, 0.0, 0.1, 0.6}) {
      EXPECT_NEAR(f(x, z), b.b(x, z), 1e-12) << x << " " << z;
    }
  }
}

TEST(StripSurface, PlaneAndSlopeMinusTwo) {
  const RuledSurface p = strip_surface(Profile::constant(0), {-1, 1}, 5);
  ASSERT_EQ(p.families.size(), 1u);
  for (const Segment& s : p.families[0]) {
    EXPECT_EQ(s.a.y, 0.0);
    EXPECT_EQ(s.b.y, 0.0);
    EXPECT_EQ(s.a.x, -1.0);
    EXPECT_EQ(s.b.x, 1.0);
  }
  const RuledSurface q = strip_surface(Profile::linear(-2), {-1, 1}, 11);
  for (const Segment& s : q.families[0]) {
    EXPECT_DOUBLE_EQ(s.a.y, 2 * s.a.z);
    EXPECT_DOUBLE_EQ(s.b.y, -2 * s.b.z);
  }
  EXPECT_LE(q.max_chord_offset(), 1e-14);
  EXPECT_LE(strip_surface(Profile::arctan(-1, 1), {-3, 3}).max_chord_offset(),
            1e-14);
}

TEST(StripSurface, AlphaStripRulingsAreHorizontal) {
  const Profile a = Profile::broken_plane_alpha(1.0);
  const RuledSurface s = alpha_strip_surface(a, realize_window(a, {-2, 2}));
  EXPECT_LE(s.max_chord_offset(), 1e-14);
}

TEST(PairwiseSlopes, MultiscaleMatchesFullScanOnMonotonePieces) {
  const Profile p = Profile::arctan(2.0, 0.3);
  StripOptions full;
  full.full_scan_limit = 10000;
  StripOptions coarse;
  coarse.full_scan_limit = 10;
  const auto g = p.grid(-2, 2, 3001);
  const SlopeExtremes a = pairwise_slopes(p, g, full);
  const SlopeExtremes b = pairwise_slopes(p, g, coarse);
  EXPECT_NEAR(a.max_slope, b.max_slope, 1e-9);
  EXPECT_NEAR(a.min_slope, b.min_slope, 1e-9);
}

}  // namespace
}  // namespace heis
