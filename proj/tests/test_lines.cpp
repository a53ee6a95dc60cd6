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
#include "heis/io.hpp"
#include "heis/lines.hpp"
#include "heis/strips.hpp"

namespace heis {
namespace {

CrossingSurface plane_y0() {
  CrossingSurface s;
  s.name = "plane";
  s.offset = [](const GroupPoint& p) { return p.y; };
  s.box = {-1, 1, -2, 2, -2, 2};
  s.on_surface = [](const GroupPoint& p) { return std::abs(p.y) <= 1e-8; };
  return s;
}

// Random sampled sigma on [-1, 1] with consecutive slopes in [smin, smax].
Profile random_sigma(std::mt19937_64& rng, double smin, double smax) {
  std::uniform_real_distribution<double> slope(smin, smax);
  std::uniform_real_distribution<double> start(-1.0, 1.0);
  std::vector<double> t{-1.0}, v{start(rng)};
  for (int k = 1; k <= 8; ++k) {
    const double tk = -1.0 + 2.0 * k / 8;
    v.push_back(v.back() + slope(rng) * (tk - t.back()));
    t.push_back(tk);
  }
  return Profile::samples(t, v);
}

TEST(LineSample, IsHorizontal) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> d(-2, 2);
  for (int i = 0; i < 200; ++i) {
    const LineSample l{std::abs(d(rng)), d(rng), d(rng)};
    const GroupPoint a = l.at(d(rng));
    const GroupPoint b = l.at(d(rng));
    EXPECT_LE(std::abs(horizontal_chord_offset(a, b)), 1e-12);
  }
}

TEST(LineSample, CoordinatesRoundTrip) {
  const GroupPoint p{0.3, -0.7, 1.1};
  for (double th : {0.0, 0.4, 1.5707963267948966, 2.9}) {
    const LineSample l = line_coordinates(p, th);
    // p sits at the parameter given by its rotated x-coordinate.
    const GroupPoint r = l.at(rotate(p, -th).x);
    const bool hit = std::abs(r.x - p.x) < 1e-12 &&
                     std::abs(r.y - p.y) < 1e-12 && std::abs(r.z - p.z) < 1e-12;
    EXPECT_TRUE(hit) << th;
  }
}

TEST(SampleLines, Examples) {
  EXPECT_THROW(sample_lines({{0, 0, 0}, 1.0}, 0, 1), UsageError);
  const Ball ball{{0, 0, 0}, 1.0};
  const LineBatch one = sample_lines(ball, 1, 7);
  ASSERT_EQ(one.lines.size(), 1u);
  EXPECT_TRUE(line_meets_ball(one.lines[0], ball));
}

TEST(SampleLines, EveryLineMeetsTheBall) {
  const Ball ball{{0.4, -0.2, 0.5}, 1.3};
  const LineBatch b = sample_lines(ball, 2000, 11);
  for (const LineSample& l : b.lines) EXPECT_TRUE(line_meets_ball(l, ball));
  EXPECT_GE(b.attempts, 2000u);
}

// Brute-force distance from the ball center over a dense parameter scan.
TEST(SampleLines, BallTestMatchesScan) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> d(-2.5, 2.5);
  std::uniform_real_distribution<double> th(0, 3.141592653589793);
  const Ball ball{{0.2, 0.1, -0.3}, 1.0};
  int checked = 0;
  for (int i = 0; i < 300; ++i) {
    const LineSample l{th(rng), d(rng), d(rng)};
    double best = INFINITY;
    for (int k = -40000; k <= 40000; ++k) {
      const GroupPoint p = inverse(ball.center) * l.at(k * 1e-4);
      best = std::min(best, koranyi_norm(p));
    }
    if (std::abs(best - 1.0) < 1e-3) continue;
    EXPECT_EQ(line_meets_ball(l, ball), best <= 1.0) << i;
    ++checked;
  }
  EXPECT_GT(checked, 250);
}

TEST(SampleLines, Deterministic) {
  const Ball ball{{0, 0, 0}, 2.0};
  const LineBatch a = sample_lines(ball, 500, 99);
  const LineBatch b = sample_lines(ball, 500, 99);
  ASSERT_EQ(a.lines.size(), b.lines.size());
  for (std::size_t i = 0; i < a.lines.size(); ++i) {
    EXPECT_EQ(a.lines[i].theta, b.lines[i].theta);
    EXPECT_EQ(a.lines[i].v, b.lines[i].v);
    EXPECT_EQ(a.lines[i].w, b.lines[i].w);
  }
  EXPECT_EQ(a.attempts, b.attempts);
  // Line i depends only on (seed, i).
  const LineBatch c = sample_lines(ball, 50, 99);
  for (std::size_t i = 0; i < c.lines.size(); ++i) {
    EXPECT_EQ(a.lines[i].w, c.lines[i].w);
  }
}

double ratio_se(const MeasureEstimate& a, const MeasureEstimate& b) {
  const double r = a.value / b.value;
  return r * std::hypot(a.std_error / a.value, b.std_error / b.value);
}

TEST(LineMeasure, BallRatioIsEight) {
  const MeasureEstimate m1 = line_measure({{0, 0, 0}, 1.0}, 1000000, 1);
  const MeasureEstimate m2 = line_measure({{0, 0, 0}, 2.0}, 1000000, 2);
  const double r = m2.value / m1.value;
  EXPECT_NEAR(r, 8.0, 3.0 * ratio_se(m2, m1));
}

TEST(LineMeasure, CubicScaling) {
  const MeasureEstimate m1 = line_measure({{0, 0, 0}, 1.0}, 400000, 10);
  for (double r : {0.5, 2.0, 4.0}) {
    const MeasureEstimate m = line_measure({{0, 0, 0}, r}, 400000, 11);
    EXPECT_NEAR(m.value / m1.value, r * r * r, 3.0 * ratio_se(m, m1)) << r;
  }
}

TEST(LineMeasure, LeftInvariant) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> d(-2, 2);
  const MeasureEstimate m0 = line_measure({{0, 0, 0}, 1.0}, 400000, 20);
  for (int i = 0; i < 4; ++i) {
    const GroupPoint g{d(rng), d(rng), d(rng)};
    const MeasureEstimate m = line_measure({g, 1.0}, 400000, 21 + i);
    EXPECT_NEAR(m.value, m0.value,
                3.0 * std::hypot(m.std_error, m0.std_error))
        << i;
  }
}

TEST(Crossings, PlaneExamples) {
  const CrossingSurface s = plane_y0();
  EXPECT_EQ(crossings(s, line_coordinates({0, 1, 0}, 0.0)).t.size(), 0u);
  const LineCrossings c =
      crossings(s, line_coordinates({0, 0, 0}, 1.5707963267948966));
  ASSERT_EQ(c.t.size(), 1u);
  EXPECT_NEAR(c.t[0], 0.0, 1e-9);
}

TEST(Crossings, BrokenPlaneChord) {
  const GroupPoint p{0.5, -0.5, 0.125};
  const GroupPoint q{-0.5, -0.5, -0.125};
  EXPECT_LE(std::abs(horizontal_chord_offset(p, q)), 1e-15);
  const BrokenPlane bp(1.0);
  EXPECT_TRUE(bp.contains(p, 1e-12));
  EXPECT_TRUE(bp.contains(q, 1e-12));
  const CrossingSurface s = broken_plane_crossing_surface(1.0, -2, 2);
  const LineSample l = line_coordinates(p, 0.0);
  const LineCrossings c = crossings(s, l);
  ASSERT_EQ(c.t.size(), 2u);
  EXPECT_FALSE(c.degenerate);
  EXPECT_NEAR(l.at(c.t[0]).x, -0.5, 1e-9);
  EXPECT_NEAR(l.at(c.t[1]).x, 0.5, 1e-9);
}

TEST(Crossings, RootsLieOnTheSurface) {
  const Profile sigma = Profile::linear(-1.0);
  const CrossingSurface s = sigma_crossing_surface(sigma, -1, 1);
  const LineBatch b = sample_lines(bounding_ball(s), 500, 4);
  for (const LineSample& l : b.lines) {
    for (double t : crossings(s, l).t) EXPECT_TRUE(s.on_surface(l.at(t)));
  }
}

TEST(Monotonicity, Examples) {
  const CrossingReport lin =
      monotonicity_check(Profile::linear(-1.0), -1, 1, 100000, 1);
  EXPECT_EQ(lin.violations, 0u);
  EXPECT_GT(lin.crossing_lines, 0u);
  const CrossingReport plane =
      monotonicity_check(Profile::constant(0.0), -1, 1, 100000, 2);
  EXPECT_EQ(plane.violations, 0u);

  const CrossingSurface s =
      alpha_crossing_surface(Profile::broken_plane_alpha(1.0), -1, 1);
  const CrossingReport bp = monotonicity_check(s, bounding_ball(s), 100000, 3);
  EXPECT_GE(bp.violations, 1u);
  ASSERT_FALSE(bp.witnesses.empty());
  EXPECT_TRUE(bp.witnesses[0].validated);
}

TEST(Monotonicity, BrokenPlanesHaveValidatedWitnesses) {
  for (double u : {0.5, 1.0, 2.0}) {
    const CrossingSurface s = broken_plane_crossing_surface(u, -1, 1);
    const CrossingReport r = monotonicity_check(s, bounding_ball(s), 20000, 5);
    EXPECT_GE(r.violations, 1u) << u;
    bool validated = false;
    for (const Witness& w : r.witnesses) {
      validated = validated || (w.validated && w.max_chord_offset <= 1e-12);
    }
    EXPECT_TRUE(validated) << u;
  }
}

TEST(Monotonicity, RandomAdmissibleProfiles) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 20; ++i) {
    const Profile sigma = random_sigma(rng, -2.0, 2.0 - 1e-6);
    const CrossingReport r = monotonicity_check(sigma, -1, 1, 10000, 100 + i);
    EXPECT_EQ(r.violations, 0u) << i;
  }
}

TEST(Monotonicity, SteepProfileViolates) {
  const CrossingReport r =
      monotonicity_check(Profile::linear(-3.0), -1, 1, 20000, 6);
  EXPECT_GE(r.violations, 1u);
}

TEST(Monotonicity, ReportIsReproducible) {
  const CrossingSurface s = broken_plane_crossing_surface(1.0, -1, 1);
  const CrossingReport a = monotonicity_check(s, bounding_ball(s), 5000, 8);
  const CrossingReport b = monotonicity_check(s, bounding_ball(s), 5000, 8);
  EXPECT_EQ(crossing_report_json(a), crossing_report_json(b));
  // Witness lines are recomputable from (seed, index).
  const LineBatch batch = sample_lines(bounding_ball(s), 5000, 8);
  for (const Witness& w : a.witnesses) {
    EXPECT_EQ(batch.lines[w.index].w, w.line.w);
  }
}

TEST(RelativePerimeter, SameSurfaceGivesIdenticalEstimates) {
  const CrossingSurface s = sigma_crossing_surface(Profile::linear(-1), -1, 1);
  const PerimeterEstimate e =
      relative_perimeter(s, s, bounding_ball(s), 20000, 9);
  EXPECT_EQ(e.mean_e, e.mean_f);
  EXPECT_EQ(e.se_e, e.se_f);
}

TEST(RelativePerimeter, BumpIsLarger) {
  const CrossingSurface flat = plane_y0();
  CrossingSurface bump = flat;
  bump.name = "bump";
  bump.offset = [](const GroupPoint& p) {
    const double x = p.x;
    const double z = p.z - 0.5 * p.x * p.y;
    const double r2 = x * x + z * z;
    return p.y - (r2 < 0.25 ? 0.6 * (0.25 - r2) / 0.25 : 0.0);
  };
  const Ball ball{{0, 0, 0}, 2.0};
  const PerimeterEstimate e = relative_perimeter(flat, bump, ball, 1000000, 12);
  EXPECT_GT(e.mean_f - e.mean_e, 3.0 * std::hypot(e.se_e, e.se_f));
}

}  // namespace
}  // namespace heis
