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

#include "heis/variation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "heis/error.hpp"
#include "heis/quadrature.hpp"
#include "heis/roots.hpp"
#include "heis/strips.hpp"

namespace heis {

namespace {

// Antiderivative of sqrt(1 + m^2).
double sqrt_antideriv(double m) {
  return 0.5 * (m * std::sqrt(1.0 + m * m) + std::asinh(m));
}

bool is_zero_profile(const Profile& p) {
  for (int i = 0; i <= 2000; ++i) {
    if (p(-1000.0 + i) != 0.0) return false;
  }
  return true;
}

// Support of tau, with identically zero profiles mapped to a point.
Interval support_of(const Profile& tau) {
  if (auto s = tau.support()) return *s;
  if (is_zero_profile(tau)) return {0.0, 0.0};
  throw UsageError("tau needs compact support");
}

void check_strip(const Profile& alpha, double a, double b) {
  const SlopeExtremes e = pairwise_slopes(alpha, alpha.grid(a, b, 1001));
  if (e.min_slope < -2.0 - 1e-9) {
    throw DomainError("alpha is not a graphical strip");
  }
}

}  // namespace

DeformationData::DeformationData(Profile alpha, Profile tau, double lambda)
    : alpha_(std::move(alpha)), tau_(std::move(tau)), lambda_(lambda) {
  const Interval s = support_of(tau_);
  if (s.length() > 0.0) {
    lip_ = std::abs(lambda_) * tau_.lipschitz_on(s.lo, s.hi, 2001);
  }
  if (!(lip_ < 2.0)) {
    throw DomainError("Lip(tau) must be below 2");
  }
  tau_kinks_ = tau_.kinks();
  tau_kinks_.push_back(s.lo);
  tau_kinks_.push_back(s.hi);
}

double DeformationData::zeta_inv(double w) const {
  if (lambda_ == 0.0) return w;
  const auto s = tau_.support();
  // zeta fixes everything outside the support, and the support endpoints.
  if (s && (w <= s->lo || w >= s->hi)) return w;
  const double lo = s ? s->lo : w - 1.0;
  const double hi = s ? s->hi : w + 1.0;
  return solve_increasing([this](double z) { return zeta(z); }, w, lo, hi);
}

double DeformationData::g(double w, double x) const {
  return (1.0 - x) * h(w) + x * w + 0.5 * delta(w) * x * (1.0 - x);
}

Interval eta_preimage(const Profile& alpha, double z) {
  auto eta = [&](double w) { return eta_of(alpha, w); };
  const double lo = solve_increasing(eta, z, z - 1.0, z + 1.0);
  const double hi = -solve_increasing([&](double s) { return -eta(-s); }, -z,
                                      -z - 1.0, -z + 1.0);
  return {lo, std::max(lo, hi)};
}

std::vector<double> DeformationData::breaks(double a, double b) const {
  std::vector<double> out;
  for (double k : alpha_.kinks()) {
    if (k > a && k < b) out.push_back(k);
  }
  if (lambda_ != 0.0) {
    for (double k : tau_kinks_) {
      const Interval pre = eta_preimage(alpha_, zeta(k));
      for (double w : {pre.lo, pre.hi}) {
        if (w > a && w < b) out.push_back(w);
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

RuledSurface build_half_deformation(const Profile& alpha, const Profile& tau,
                                    const Interval& w_range, int rulings) {
  if (rulings < 2) throw UsageError("need at least two rulings");
  if (!(w_range.hi > w_range.lo)) throw UsageError("empty w range");
  check_strip(alpha, w_range.lo, w_range.hi);
  const DeformationData d(alpha, tau);

  std::vector<double> ws(static_cast<std::size_t>(rulings));
  for (int k = 0; k < rulings; ++k) {
    ws[k] = k == rulings - 1
                ? w_range.hi
                : w_range.lo + w_range.length() * k / (rulings - 1);
  }
  RuledSurface s;
  s.name = "half-deformation";
  std::vector<Segment> fam;
  fam.reserve(ws.size());
  std::vector<double> hs(ws.size());
  std::vector<double> ds(ws.size());
  for (std::size_t k = 0; k < ws.size(); ++k) {
    const double w = ws[k];
    const double a = alpha(w);
    hs[k] = d.h(w);
    ds[k] = a - d.tau(hs[k]);
    fam.push_back({{1.0, a, d.eta(w)}, {0.0, d.tau(hs[k]), hs[k]}});
  }
  for (int j = 0; j <= 20; ++j) {
    const double x = j / 20.0;
    for (std::size_t k = 1; k < ws.size(); ++k) {
      auto g = [&](std::size_t i) {
        return (1.0 - x) * hs[i] + x * ws[i] + 0.5 * ds[i] * x * (1.0 - x);
      };
      if (g(k) < g(k - 1) - 1e-12) {
        throw DomainError("deformation is not an intrinsic graph");
      }
    }
  }
  s.families.push_back(std::move(fam));
  return s;
}

double ruled_area_closed_form(const DeformationData& d, double a, double b) {
  if (!(a < b)) throw DomainError("ruled area needs a < b");
  const Profile& alpha = d.alpha();
  const double first = integrate_1d(
      [&](double w) {
        const double dl = d.delta(w);
        return std::sqrt(1.0 + dl * dl) * (1.0 + 0.5 * alpha.derivative(w));
      },
      a, b, d.breaks(a, b));
  return first - (sqrt_antideriv(d.delta(b)) - sqrt_antideriv(d.delta(a))) /
                     6.0;
}

double ruled_area_closed_form(const Profile& alpha, const Profile& tau,
                              double a, double b) {
  return ruled_area_closed_form(DeformationData(alpha, tau), a, b);
}

double second_variation(const Profile& alpha, const Profile& tau) {
  const Interval s = support_of(tau);
  if (s.length() <= 0.0) return 0.0;
  const double a = eta_preimage(alpha, s.lo).lo;
  const double b = eta_preimage(alpha, s.hi).hi;
  if (!(b > a)) return 0.0;
  std::vector<double> br;
  for (double k : alpha.kinks()) {
    if (k > a && k < b) br.push_back(k);
  }
  std::vector<double> tk = tau.kinks();
  for (double k : tk) {
    const Interval pre = eta_preimage(alpha, k);
    for (double w : {pre.lo, pre.hi}) {
      if (w > a && w < b) br.push_back(w);
    }
  }
  std::sort(br.begin(), br.end());
  br.erase(std::unique(br.begin(), br.end()), br.end());
  return integrate_1d(
      [&](double w) {
        const double t = tau(eta_of(alpha, w));
        const double al = alpha(w);
        return t * t * (1.0 + alpha.derivative(w)) /
               std::pow(1.0 + al * al, 1.5);
      },
      a, b, br);
}

std::vector<double> default_lambda_grid() {
  return {-0.08, -0.06, -0.04, -0.02, 0.02, 0.04, 0.06, 0.08};
}

namespace {

// True when no plateau of eta of width above the probe contains w.
bool isolated_level(const Profile& alpha, double w) {
  const double e = 1e-7 * (1.0 + std::abs(w));
  const double z = eta_of(alpha, w);
  return eta_of(alpha, w - e) < z && eta_of(alpha, w + e) > z;
}

double pick_endpoint(const Profile& alpha, double start, double step) {
  double w = start;
  for (int i = 0; i < 50; ++i) {
    if (isolated_level(alpha, w)) return w;
    w += step;
  }
  throw DomainError("no window endpoint outside eta plateaus");
}

}  // namespace

SecondVariationReport second_variation_experiment(
    const Profile& alpha, const Profile& tau,
    const std::vector<double>& lambdas, const SecondVariationOptions& opt) {
  if (lambdas.empty()) throw UsageError("empty lambda grid");
  std::vector<double> sorted = lambdas;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] == 0.0 || sorted[i] != -sorted[sorted.size() - 1 - i]) {
      throw UsageError("lambda grid must be symmetric about 0 without 0");
    }
  }

  SecondVariationReport rep;
  const Interval s = support_of(tau);
  const double pre_lo = eta_preimage(alpha, s.lo).lo;
  const double pre_hi = eta_preimage(alpha, s.hi).hi;
  const double m = opt.margin * std::max(pre_hi - pre_lo, 1e-3);
  rep.w1 = opt.w1 ? *opt.w1 : pick_endpoint(alpha, pre_lo - m, -m);
  rep.w2 = opt.w2 ? *opt.w2 : pick_endpoint(alpha, pre_hi + m, m);
  if (!(rep.w1 < rep.w2)) throw UsageError("window needs w1 < w2");
  if (!isolated_level(alpha, rep.w1) || !isolated_level(alpha, rep.w2)) {
    throw DomainError("window endpoint lies on a plateau of eta");
  }
  check_strip(alpha, rep.w1, rep.w2);

  // Half areas for every signed grid value, then A(l) = H(l) + H(-l).
  std::vector<double> half(lambdas.size());
  std::vector<double> half_neg(lambdas.size());
  parallel_for(2 * lambdas.size() + 1, [&](std::size_t i) {
    if (i == 2 * lambdas.size()) {
      rep.base_area =
          2.0 * ruled_area_closed_form(DeformationData(alpha, tau, 0.0),
                                       rep.w1, rep.w2);
      return;
    }
    const std::size_t k = i / 2;
    const double l = (i % 2 == 0) ? lambdas[k] : -lambdas[k];
    const double a =
        ruled_area_closed_form(DeformationData(alpha, tau, l), rep.w1, rep.w2);
    (i % 2 == 0 ? half : half_neg)[k] = a;
  });

  rep.lambdas = lambdas;
  rep.ii = second_variation(alpha, tau);
  double num = 0.0;
  double den = 0.0;
  for (std::size_t k = 0; k < lambdas.size(); ++k) {
    const double area = half[k] + half_neg[k];
    const double da = area - rep.base_area;
    rep.areas.push_back(area);
    rep.delta_areas.push_back(da);
    const double l2 = lambdas[k] * lambdas[k];
    num += l2 * da;
    den += l2 * l2;
  }
  rep.fitted = num / den;

  double sx = 0, sy = 0, sxx = 0, sxy = 0, r2 = 0;
  int cnt = 0;
  for (std::size_t k = 0; k < lambdas.size(); ++k) {
    const double r =
        std::abs(rep.delta_areas[k] - lambdas[k] * lambdas[k] * rep.ii);
    r2 += r * r;
    if (r > 0.0) {
      const double lx = std::log(std::abs(lambdas[k]));
      const double ly = std::log(r);
      sx += lx;
      sy += ly;
      sxx += lx * lx;
      sxy += lx * ly;
      ++cnt;
    }
    for (std::size_t j = 0; j < lambdas.size(); ++j) {
      if (lambdas[j] == -lambdas[k]) {
        rep.max_odd_part = std::max(
            rep.max_odd_part, std::abs(rep.delta_areas[k] - rep.delta_areas[j]));
      }
    }
  }
  rep.residual_norm = std::sqrt(r2);
  const double var = cnt * sxx - sx * sx;
  // With no nonzero residuals the law holds exactly and no slope exists.
  rep.residual_slope = (cnt >= 2 && var > 0.0)
                           ? (cnt * sxy - sx * sy) / var
                           : std::numeric_limits<double>::infinity();
  return rep;
}

}  // namespace heis
