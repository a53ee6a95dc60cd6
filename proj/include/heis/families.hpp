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

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "heis/graphs.hpp"
#include "heis/lines.hpp"
#include "heis/profile.hpp"
#include "heis/quadrature.hpp"
#include "heis/surface.hpp"

namespace heis {

// An entire ruled intrinsic graph given by its slope band: the rulings through
// Z^z are the lines of slope m in [sigma_minus(z), sigma_plus(z)].
class RuledEntireGraph {
 public:
  // Throws UsageError unless sigma_minus <= sigma_plus and both are
  // nonincreasing on samples of the window.
  RuledEntireGraph(Profile sigma_plus, Profile sigma_minus, Interval window);
  static RuledEntireGraph single(Profile sigma, Interval window);

  const Profile& sigma_plus() const { return plus_; }
  const Profile& sigma_minus() const { return minus_; }
  const Interval& window() const { return window_; }

  // The graph function; throws DomainError("window too small") when the
  // ruling through the point starts outside the window.
  double f(double x, double z) const;
  // f_t(x, z) = f(t x, t^2 z) / t.
  double f_t(double t, double x, double z) const;

 private:
  Profile plus_;
  Profile minus_;
  Interval window_;
};

// F_{m,M}: slope m below the wedge, M above it, -2z/x inside.
double limit_function(double m, double M, double x, double z);

struct ScalingLimitReport {
  double m_inf = 0.0;        // limit of sigma_plus at +infinity
  double m_minus_inf = 0.0;  // limit at -infinity
  double u = 0.0;
  double theta = 0.0;  // in [0, pi)
  bool plane = false;
  std::vector<double> t_grid;
  std::vector<V0Point> probes;
  std::vector<std::vector<double>> errors;  // errors[i][j] at t_grid[i]
  std::vector<double> max_error;
};

// Tail limit of p by a least-squares fit of c0 + c1/z + c2/z^2 on the last
// decade [Z/10, Z] (sign = +1) or [-Z, -Z/10] (sign = -1).
double tail_limit(const Profile& p, double z_abs_max, int sign);

// (u, theta) of the broken plane with lower slope m and upper slope M.
std::pair<double, double> classify_broken_plane(double m, double M);

std::vector<V0Point> default_probes();

ScalingLimitReport scaling_limit(const RuledEntireGraph& g,
                                 const std::vector<double>& t_grid,
                                 const std::vector<V0Point>& probes =
                                     default_probes());

// Rulings [(-1, 2z, z), (1, -2 rho(z), rho(z))]. Throws DomainError unless rho
// is strictly increasing on the samples.
RuledSurface sigma_rho_surface(const Profile& rho, const Interval& window,
                               int rulings = 201);
// g_{z1,z2}(x) = (z1/2)(x-1)^2 + (z2/2)(x+1)^2.
double sigma_rho_g(double z1, double z2, double x);
// Closed form; 0 when a == b, DomainError when a > b.
double sigma_rho_area(const Profile& rho, double a, double b);
// Quadrature of (4/3)(1 + rho') sqrt(1 + (z + rho)^2) over [a, b].
double sigma_rho_area_quadrature(const Profile& rho, double a, double b);

struct ChordObstruction {
  bool no_chord = false;
  std::uint64_t pairs = 0;
  double min_abs_offset = 0.0;
  // max |offset - w (s0 t0 - s t)| over the samples
  double max_formula_deviation = 0.0;
  double endpoint_offset = 0.0;  // offset of the (s0, t0) pair itself
};

// Samples (s, t) in the open square (s0, t0)^2 on the rulings through z1 and
// z2 and measures chord offsets. Throws UsageError if z1 == z2.
ChordObstruction chord_obstruction_check(const Profile& rho, double z1,
                                         double z2, std::uint64_t samples,
                                         std::uint64_t seed = 1);

// Sigma_rho as a crossing surface cut to z in [z0, z1].
CrossingSurface sigma_rho_crossing_surface(const Profile& rho, double z0,
                                           double z1);

enum class CompetitorKind { kHarmonic, kMinimal };

struct Hyperbola {
  double u = 0.0;
  double A = 0.0;  // semi-axis along y
  double B = 0.0;  // semi-axis along x
  // Lower branch through (1, -u) with foci (-1, +-u).
  double y(double x) const;
  double dy(double x) const;
};

Hyperbola competitor_hyperbola(double u);
// y-intercept of the lower branch.
double competitor_a(double u);
// Height at x = 1 of the lift of the hyperbola from (0, a, -a/2).
double competitor_b(double u);
// Same value via a polygonal lift with n vertices.
double competitor_b_polygon(double u, int n);
// Height of the lifted hyperbola over x in [0, 1].
double competitor_lift_z(double u, double x);
// Slopes of the two family-(2) segments of the harmonic kind at nexus
// parameter t in [0, 1].
std::pair<double, double> harmonic_slopes(double u, double t);
// |angle(tangent, focus +) - angle(tangent, focus -)| at x on the branch.
double tangent_bisection_defect(double u, double x);

struct CompetitorSurface {
  CompetitorKind kind = CompetitorKind::kMinimal;
  double u = 0.0;
  double a = 0.0;  // minimal kind only
  double b = 0.0;  // minimal kind only
  GroupPoint nexus_start;  // q1 or p1
  GroupPoint nexus_end;    // q2 or p2
  RuledSurface half;       // families (1), (2) upper, (2) lower, (3), (4)
  RuledSurface full;       // half together with its s_{-1,1} image
};

// Throws DomainError if u <= 0.
CompetitorSurface build_competitor(CompetitorKind kind, double u,
                                   int resolution = 64, double z_top = 0.0);

struct CompetitorComparison {
  double u = 0.0;
  Interval window;
  double area_minimal = 0.0;
  double area_harmonic = 0.0;
  double area_wu = 0.0;
  double energy_minimal = 0.0;
  double energy_harmonic = 0.0;
  double energy_wu = 0.0;
};

// Interval [-2u, 2u].
Interval default_competitor_window(double u);

// Areas and energies of both competitors and of W_u over the z window. The
// window must contain [-u, u] or miss it; otherwise UsageError.
CompetitorComparison competitor_compare(double u, const Interval& window,
                                        const QuadConfig& cfg = {});

}  // namespace heis
