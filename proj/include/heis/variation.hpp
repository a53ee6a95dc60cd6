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

#include <optional>
#include <vector>

#include "heis/profile.hpp"
#include "heis/surface.hpp"

namespace heis {

// The maps attached to a boundary profile alpha and a deformation profile
// lambda * tau. zeta must be strictly increasing, which Lip(lambda tau) < 2
// guarantees.
class DeformationData {
 public:
  // Throws DomainError if Lip(lambda tau) >= 2 on the support of tau.
  DeformationData(Profile alpha, Profile tau, double lambda = 1.0);

  const Profile& alpha() const { return alpha_; }
  double tau(double z) const { return lambda_ * tau_(z); }
  double tau_lipschitz() const { return lip_; }

  double eta(double w) const { return w + 0.5 * alpha_(w); }
  double zeta(double z) const { return z - 0.5 * tau(z); }
  double zeta_inv(double w) const;
  double beta(double w) const { return tau(zeta_inv(w)); }
  double delta(double w) const { return alpha_(w) - beta(eta(w)); }
  double h(double w) const { return zeta_inv(eta(w)); }
  // z coordinate of the projection of the ruling R_w at x in [0, 1].
  double g(double w, double x) const;

  // Points of w where delta may fail to be smooth: kinks of alpha and
  // preimages under eta of zeta(kinks of tau).
  std::vector<double> breaks(double a, double b) const;

 private:
  Profile alpha_;
  Profile tau_;
  double lambda_;
  double lip_ = 0.0;
  std::vector<double> tau_kinks_;
};

// Smallest and largest w with eta(w) = z (they differ on plateaus).
Interval eta_preimage(const Profile& alpha, double z);

// Rulings [X Z^w Y^alpha(w), Z^h(w) Y^tau(h(w))] for w uniform in w_range.
// Throws DomainError if alpha is not a strip on w_range, if Lip(tau) >= 2,
// or if w -> g_w(x) decreases somewhere on the sample grid.
RuledSurface build_half_deformation(const Profile& alpha, const Profile& tau,
                                    const Interval& w_range,
                                    int rulings = 201);

// Area of the half surface over w in [a, b]. Throws DomainError if a >= b.
double ruled_area_closed_form(const Profile& alpha, const Profile& tau,
                              double a, double b);
double ruled_area_closed_form(const DeformationData& d, double a, double b);

// II(tau) = int tau(eta)^2 (1 + alpha') / (1 + alpha^2)^(3/2) dw.
double second_variation(const Profile& alpha, const Profile& tau);

struct SecondVariationOptions {
  // Window D margin beyond the preimage of supp tau, relative to its length.
  double margin = 0.1;
  std::optional<double> w1;
  std::optional<double> w2;
};

struct SecondVariationReport {
  std::vector<double> lambdas;
  std::vector<double> areas;  // area of D cap S_{alpha, lambda tau}
  std::vector<double> delta_areas;
  double base_area = 0.0;
  double fitted = 0.0;  // least-squares c in delta_area ~ c lambda^2
  double ii = 0.0;
  double residual_norm = 0.0;  // l2 norm of delta_area - lambda^2 II
  double residual_slope = 0.0;  // log-log slope of |residual| against |lambda|
  double max_odd_part = 0.0;  // max |delta_area(l) - delta_area(-l)|
  double w1 = 0.0;
  double w2 = 0.0;
};

std::vector<double> default_lambda_grid();

// Throws UsageError unless the grid is symmetric about 0 with nonzero values.
SecondVariationReport second_variation_experiment(
    const Profile& alpha, const Profile& tau,
    const std::vector<double>& lambdas = default_lambda_grid(),
    const SecondVariationOptions& opt = {});

}  // namespace heis
