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

#include <functional>
#include <limits>
#include <vector>

#include "heis/group.hpp"
#include "heis/quadrature.hpp"

namespace heis {

// A rectangular window [x0, x1] x [z0, z1] of V0.
struct Window {
  double x0 = -std::numeric_limits<double>::infinity();
  double x1 = std::numeric_limits<double>::infinity();
  double z0 = -std::numeric_limits<double>::infinity();
  double z1 = std::numeric_limits<double>::infinity();

  bool contains(double x, double z) const {
    return x >= x0 && x <= x1 && z >= z0 && z <= z1;
  }
  bool bounded() const;
  double diagonal() const;
};

// f : window -> R, closed form or bilinear interpolation of grid samples.
class ScalarField {
 public:
  using Fn = std::function<double(double x, double z)>;

  static ScalarField closed(Fn f, Window domain = {});
  // values[i * (nz + 1) + j] = f(x0 + i dx, z0 + j dz), i <= nx, j <= nz.
  static ScalarField sampled(const Window& domain, int nx, int nz,
                             std::vector<double> values);
  static ScalarField sample_from(const Fn& f, const Window& domain, int nx,
                                 int nz);

  double operator()(double x, double z) const;
  const Window& domain() const { return domain_; }
  bool is_sampled() const { return nx_ > 0; }

 private:
  Fn f_;
  Window domain_;
  int nx_ = 0;
  int nz_ = 0;
  std::vector<double> values_;
};

// Central-difference estimate of (d_x f - f d_z f)(u). Throws
// DomainError("boundary stencil") if a stencil point leaves the domain.
double intrinsic_gradient(const ScalarField& f, const V0Point& u, double h);

// Integral over W of sqrt(1 + (grad_f f)^2) d(mu).
QuadResult graph_area(const ScalarField& f, const Region& w,
                      const QuadConfig& cfg = {});
// Integral over W of (grad_f f)^2 / 2 d(mu).
QuadResult dirichlet_energy(const ScalarField& f, const Region& w,
                            const QuadConfig& cfg = {});

struct CharacteristicCurve {
  std::vector<double> x;
  std::vector<double> g;
  bool truncated = false;
  // Set when |d_z f| along the trace exceeded lipschitz_threshold, where
  // uniqueness of the integral curve is not guaranteed.
  bool uniqueness_not_guaranteed = false;
};

// RK4 trace of g'(x) = -f(x, g(x)) from p0 to x_end (either direction).
CharacteristicCurve characteristic_curve(const ScalarField& f,
                                         const V0Point& p0, double x_end,
                                         double step = 1e-3,
                                         double lipschitz_threshold = 1e6);

struct PlanarPoint {
  double x = 0.0;
  double y = 0.0;
};

class PlanarCurve {
 public:
  // Throws UsageError if consecutive vertices coincide.
  explicit PlanarCurve(std::vector<PlanarPoint> vertices);
  const std::vector<PlanarPoint>& vertices() const { return vertices_; }

 private:
  std::vector<PlanarPoint> vertices_;
};

struct LiftedCurve {
  std::vector<GroupPoint> vertices;
  double horizontality_residual = 0.0;
};

// Piecewise horizontal lift starting at height z0.
LiftedCurve horizontal_lift(const PlanarCurve& c, double z0);

// Sub-Riemannian area of the surface z = phi(x, y) over a planar region.
using PlanarField = std::function<double(double x, double y)>;
QuadResult zgraph_area(const PlanarField& phi, const Region& r,
                       const QuadConfig& cfg = {});
// Dirichlet energy of the same surface viewed as an intrinsic graph.
QuadResult zgraph_energy(const PlanarField& phi, const Region& r,
                         const QuadConfig& cfg = {});

// As above, with the height given on the parameter square of the region:
// z(s, r) = phi(region.map(s, r)). Derivatives are taken in (s, r), so the
// stencil never leaves the patch.
using PatchHeight = std::function<double(double s, double r)>;
QuadResult zgraph_patch_area(const PatchHeight& z, const Region& r,
                             const QuadConfig& cfg = {});
QuadResult zgraph_patch_energy(const PatchHeight& z, const Region& r,
                               const QuadConfig& cfg = {});

}  // namespace heis
