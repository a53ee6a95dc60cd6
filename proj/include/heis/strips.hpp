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

#include <string>

#include "heis/graphs.hpp"
#include "heis/profile.hpp"
#include "heis/surface.hpp"

namespace heis {

// eta(w) = w + alpha(w)/2.
double eta_of(const Profile& alpha, double w);

struct StripOptions {
  int grid_points = 1001;
  double eps_slope = 1e-9;
  // Above this many grid points the pairwise scan uses pairs (i, i + 2^k).
  int full_scan_limit = 2000;
};

struct SlopeExtremes {
  double min_slope = 0.0;
  double min_t1 = 0.0;
  double min_t2 = 0.0;
  double max_slope = 0.0;
  double max_t1 = 0.0;
  double max_t2 = 0.0;
};

// Extreme difference quotients of p over pairs of grid nodes.
SlopeExtremes pairwise_slopes(const Profile& p, const std::vector<double>& grid,
                              const StripOptions& opt = {});

struct StripVerdict {
  bool ok = false;
  double w1 = 0.0;  // witness pair on failure, extreme pair otherwise
  double w2 = 0.0;
  double slope = 0.0;
  Interval w_range;  // grid realizing the z window
  std::string reason;
};

// The w-interval whose eta image covers the z window; throws DomainError if
// eta does not reach the window endpoints.
Interval realize_window(const Profile& alpha, const Interval& z_window);

StripVerdict is_graphical_strip(const Profile& alpha, const Interval& z_window,
                                const StripOptions& opt = {});
// Throws DomainError if alpha does not define a strip on the window.
StripVerdict is_area_minimizing(const Profile& alpha, const Interval& z_window,
                                const StripOptions& opt = {});

// sigma = alpha o eta^{-1}, sampled at eta of the nodes of alpha on w_range.
// Throws DomainError("sigma multivalued ...") on plateaus of eta.
Profile alpha_to_sigma(const Profile& alpha, const Interval& w_range,
                       int grid_points = 1001);
// alpha(w) = sigma(z) where z - sigma(z)/2 = w. Throws DomainError("not an
// intrinsic graph") if a slope of sigma reaches 2.
Profile sigma_to_alpha(const Profile& sigma, const Interval& z_range,
                       int grid_points = 1001);

class BrokenPlane {
 public:
  explicit BrokenPlane(double u);
  double u() const { return u_; }
  double b(double x, double z) const;
  ScalarField field() const;
  Profile alpha() const;
  // Membership in BP_u up to tol, straight from the three-piece definition.
  bool contains(const GroupPoint& p, double tol) const;

 private:
  double u_;
};

BrokenPlane broken_plane(double u);

// The intrinsic graph function of S_alpha over K, by bisection on the
// ruling through each point.
ScalarField alpha_strip_field(const Profile& alpha);

// Rulings [(-1, -sigma(z), z), (1, sigma(z), z)] for z in the window.
RuledSurface strip_surface(const Profile& sigma, const Interval& z_window,
                           int rulings = 201);
// Rulings [(-1, -alpha, eta), (1, alpha, eta)] for w in w_range.
RuledSurface alpha_strip_surface(const Profile& alpha, const Interval& w_range,
                                 int rulings = 201);

}  // namespace heis
