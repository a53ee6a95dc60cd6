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
#include <numbers>
#include <random>

#include "heis/error.hpp"
#include "heis/graphs.hpp"
#include "heis/strips.hpp"

namespace heis {
namespace {

constexpr double kPi = std::numbers::pi;
const double kWedgeArea = (std::sqrt(2.0) + std::asinh(1.0)) / 3.0;

ScalarField linear_field(double m) {
  return ScalarField::closed([m](double x, double) { return m * x; });
}

Region pi_wedge(double u) {
  return Region::between(
      -1.0, 1.0, [u](double x) { return -0.5 * u * x * x; },
      [u](double x) { return 0.5 * u * x * x; }, -0.5 * u, 0.5 * u);
}

Region flat_wedge(double u) {
  return Region::between(
      -1.0, 1.0, [u](double x) { return -u * std::abs(x); },
      [u](double x) { return u * std::abs(x); }, -u, u);
}

Region unit_disk() {
  Region r;
  r.map = [](double s, double t, double& x, double& y, double& jac) {
    x = t * std::cos(2 * kPi * s);
    y = t * std::sin(2 * kPi * s);
    jac = 2 * kPi * t;
  };
  r.x_lo = r.v_lo = -1.0;
  r.x_hi = r.v_hi = 1.0;
  return r;
}

// Integral of sqrt(1 + v^2) over [0, m].
double G(double m) { return 0.5 * (m * std::sqrt(1 + m * m) + std::asinh(m)); }

TEST(IntrinsicGradient, Examples) {
  EXPECT_NEAR(intrinsic_gradient(linear_field(1.7), {0.3, -2.0}, 1e-4), 1.7,
              1e-10);
  const ScalarField b1 = broken_plane(1.0).field();
  EXPECT_NEAR(intrinsic_gradient(b1, {1.0, 0.25}, 1e-5), -0.5, 1e-8);
  const ScalarField fz = ScalarField::closed([](double, double z) { return z; });
  EXPECT_NEAR(intrinsic_gradient(fz, {1.0, 0.0}, 1e-4), 0.0, 1e-12);
}

TEST(IntrinsicGradient, BoundaryStencilIsAnError) {
  const ScalarField f =
      ScalarField::closed([](double x, double) { return x; }, {0, 1, 0, 1});
  EXPECT_THROW(intrinsic_gradient(f, {0.0, 0.5}, 1e-3), DomainError);
}

TEST(IntrinsicGradient, SecondOrderUnderStepHalving) {
  const ScalarField f = ScalarField::closed(
      [](double x, double z) { return std::sin(x) * std::cos(0.5 * z) + 0.2 * x * z; });
  const V0Point u{0.4, 0.7};
  // Exact: f_x - f f_z.
  const double fx = std::cos(0.4) * std::cos(0.35) + 0.2 * 0.7;
  const double fz = -0.5 * std::sin(0.4) * std::sin(0.35) + 0.2 * 0.4;
  const double exact = fx - f(0.4, 0.7) * fz;
  const double e1 = std::abs(intrinsic_gradient(f, u, 1e-2) - exact);
  const double e2 = std::abs(intrinsic_gradient(f, u, 5e-3) - exact);
  EXPECT_GE(std::log2(e1 / e2), 1.9);
}

TEST(ScalarField, SampledConvergesAtSecondOrder) {
  auto fn = [](double x, double z) { return std::sin(x + 0.3 * z); };
  const Window w{-1, 1, -1, 1};
  double prev = 0.0;
  for (int n : {8, 16, 32}) {
    const ScalarField s = ScalarField::sample_from(fn, w, n, n);
    double err = 0.0;
    for (int i = 0; i <= 50; ++i) {
      const double x = -0.95 + 1.9 * i / 50, z = 0.9 - 1.7 * i / 50;
      err = std::max(err, std::abs(s(x, z) - fn(x, z)));
    }
    if (prev > 0.0) EXPECT_GT(prev / err, 3.0);
    prev = err;
  }
}

// Finite-difference gradients carry rounding of order eps / h.
TEST(GraphArea, ConstantIntegrands) {
  EXPECT_NEAR(graph_area(linear_field(1.0), Region::rect(0, 1, 0, 1)).value,
              std::sqrt(2.0), 1e-8);
  EXPECT_NEAR(graph_area(linear_field(0.0), Region::rect(0, 1, 0, 1)).value,
              1.0, 1e-12);
  EXPECT_NEAR(dirichlet_energy(linear_field(3.0), Region::rect(0, 1, 0, 1)).value,
              4.5, 1e-8);
  EXPECT_NEAR(dirichlet_energy(linear_field(0.0), Region::rect(0, 1, 0, 1)).value,
              0.0, 1e-15);
}

TEST(GraphArea, BrokenPlaneWedge) {
  const QuadResult q = graph_area(broken_plane(1.0).field(), pi_wedge(1.0));
  EXPECT_NEAR(q.value, kWedgeArea, 1e-4 * kWedgeArea);
}

TEST(GraphArea, BrokenPlaneWedgeEnergy) {
  const QuadResult q = dirichlet_energy(broken_plane(1.0).field(), pi_wedge(1.0));
  EXPECT_NEAR(q.value, 1.0 / 9.0, 1e-4 / 9.0);
}

TEST(ZGraph, FlatDiskAndEmpty) {
  const PlanarField flat = [](double, double) { return 0.0; };
  EXPECT_NEAR(zgraph_area(flat, unit_disk()).value, kPi / 3, 1e-5 * kPi);
  EXPECT_EQ(zgraph_area(flat, Region::empty()).value, 0.0);
}

TEST(ZGraph, AgreesWithIntrinsicGraphOnWedges) {
  const PlanarField flat = [](double, double) { return 0.0; };
  for (double u : {0.5, 1.0, 2.0}) {
    const double exact = 2.0 / 3.0 * G(u);
    const double zg = zgraph_area(flat, flat_wedge(u)).value;
    const double ig = graph_area(broken_plane(u).field(), pi_wedge(u)).value;
    EXPECT_NEAR(zg, exact, 1e-4 * exact) << "u = " << u;
    EXPECT_NEAR(ig, zg, 1e-4 * zg) << "u = " << u;
    EXPECT_NEAR(zgraph_energy(flat, flat_wedge(u)).value, u * u * u / 9.0,
                1e-4 * u * u * u) << "u = " << u;
  }
}

TEST(ZGraph, PatchMatchesPlanarFormOnATilt) {
  const PlanarField phi = [](double x, double y) { return 0.3 * x - 0.2 * y * y; };
  const Region r = Region::rect(0.5, 1.0, -0.5, 0.5);
  const PatchHeight z = [&](double s, double t) {
    double x, y, jac;
    r.map(s, t, x, y, jac);
    return phi(x, y);
  };
  const double a = zgraph_area(phi, r).value;
  EXPECT_NEAR(zgraph_patch_area(z, r).value, a, 1e-6 * a);
  const double e = zgraph_energy(phi, r).value;
  EXPECT_NEAR(zgraph_patch_energy(z, r).value, e, 1e-5 * e);
}

TEST(Characteristic, ExactSolutions) {
  const ScalarField zero = ScalarField::closed([](double, double) { return 0.0; });
  const CharacteristicCurve c0 = characteristic_curve(zero, {0, 0.7}, 1.0);
  for (double g : c0.g) EXPECT_DOUBLE_EQ(g, 0.7);

  const CharacteristicCurve c1 = characteristic_curve(linear_field(2.0), {0, 0.3}, -1.5);
  for (std::size_t i = 0; i < c1.x.size(); ++i) {
    EXPECT_NEAR(c1.g[i], 0.3 - c1.x[i] * c1.x[i], 1e-12);
  }
}

TEST(Characteristic, BrokenPlaneRulingIsAParabola) {
  const CharacteristicCurve c =
      characteristic_curve(broken_plane(1.0).field(), {1.0, 0.25}, 0.05);
  EXPECT_FALSE(c.truncated);
  for (std::size_t i = 0; i < c.x.size(); ++i) {
    EXPECT_NEAR(c.g[i], 0.25 * c.x[i] * c.x[i], 1e-6);
  }
}

TEST(Characteristic, StripTracesFitParabolas) {
  const ScalarField f = alpha_strip_field(Profile::arctan(-0.5, 1.0));
  for (double z0 : {-0.6, 0.1, 0.8}) {
    const CharacteristicCurve c = characteristic_curve(f, {0.0, z0}, 0.9, 1e-3);
    // Quadratic least squares through the trace.
    double s[5] = {}, t[3] = {};
    for (std::size_t i = 0; i < c.x.size(); ++i) {
      double p = 1.0;
      for (int k = 0; k < 5; ++k, p *= c.x[i]) s[k] += p;
      p = 1.0;
      for (int k = 0; k < 3; ++k, p *= c.x[i]) t[k] += p * c.g[i];
    }
    double m[3][4] = {{s[0], s[1], s[2], t[0]},
                      {s[1], s[2], s[3], t[1]},
                      {s[2], s[3], s[4], t[2]}};
    for (int col = 0; col < 3; ++col) {
      for (int r = 0; r < 3; ++r) {
        if (r == col) continue;
        const double f2 = m[r][col] / m[col][col];
        for (int j = col; j < 4; ++j) m[r][j] -= f2 * m[col][j];
      }
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < c.x.size(); ++i) {
      const double x = c.x[i];
      const double fit = m[0][3] / m[0][0] + m[1][3] / m[1][1] * x +
                         m[2][3] / m[2][2] * x * x;
      worst = std::max(worst, std::abs(fit - c.g[i]));
    }
    EXPECT_LE(worst, 1e-6) << "z0 = " << z0;
  }
}

TEST(Lift, Examples) {
  LiftedCurve l = horizontal_lift(PlanarCurve({{0, 0}, {1, 0}}), 0.0);
  EXPECT_EQ(l.vertices.back().z, 0.0);
  l = horizontal_lift(PlanarCurve({{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0, 0}}), 0.0);
  EXPECT_DOUBLE_EQ(l.vertices.back().z, 1.0);
  EXPECT_THROW(PlanarCurve({{0, 0}, {0, 0}}), UsageError);
}

TEST(Lift, EdgesAreHorizontal) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> d(-2, 2);
  std::vector<PlanarPoint> v;
  for (int i = 0; i < 1000; ++i) v.push_back({d(rng), d(rng)});
  const LiftedCurve l = horizontal_lift(PlanarCurve(v), 0.4);
  EXPECT_LE(l.horizontality_residual, 1e-14 * 100);
  for (std::size_t k = 0; k + 1 < l.vertices.size(); ++k) {
    ASSERT_LE(std::abs(horizontal_chord_offset(l.vertices[k], l.vertices[k + 1])),
              1e-14 * (1 + std::abs(l.vertices[k].z)));
  }
}

}  // namespace
}  // namespace heis
