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

#include "heis/strips.hpp"

#include <algorithm>
#include <cmath>

#include "heis/error.hpp"
#include "heis/quadrature.hpp"
#include "heis/roots.hpp"

namespace heis {

double eta_of(const Profile& alpha, double w) { return w + 0.5 * alpha(w); }

namespace {

struct PairScan {
  double min_slope = HUGE_VAL;
  std::size_t min_i = 0, min_j = 0;
  double max_slope = -HUGE_VAL;
  std::size_t max_i = 0, max_j = 0;

  void offer(double s, std::size_t i, std::size_t j) {
    if (s < min_slope) {
      min_slope = s;
      min_i = i;
      min_j = j;
    }
    if (s > max_slope) {
      max_slope = s;
      max_i = i;
      max_j = j;
    }
  }
  void merge(const PairScan& o) {
    offer(o.min_slope, o.min_i, o.min_j);
    if (o.max_slope > max_slope) {
      max_slope = o.max_slope;
      max_i = o.max_i;
      max_j = o.max_j;
    }
  }
};

}  // namespace

SlopeExtremes pairwise_slopes(const Profile& p, const std::vector<double>& grid,
                              const StripOptions& opt) {
  const std::size_t n = grid.size();
  if (n < 2) throw UsageError("slope scan needs at least two grid points");
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = p(grid[i]);

  const bool full = n <= static_cast<std::size_t>(opt.full_scan_limit);
  std::vector<std::size_t> strides;
  if (!full) {
    for (std::size_t s = 1; s < n; s *= 2) strides.push_back(s);
  }
  // One partial result per row, merged in row order so ties resolve the
  // same way on every run.
  std::vector<PairScan> rows(n);
  parallel_for(n, [&](std::size_t i) {
    PairScan& r = rows[i];
    if (full) {
      for (std::size_t j = i + 1; j < n; ++j) {
        r.offer((v[j] - v[i]) / (grid[j] - grid[i]), i, j);
      }
    } else {
      for (std::size_t s : strides) {
        const std::size_t j = i + s;
        if (j >= n) break;
        r.offer((v[j] - v[i]) / (grid[j] - grid[i]), i, j);
      }
    }
  });
  PairScan all;
  for (const PairScan& r : rows) {
    if (r.min_slope <= r.max_slope) all.merge(r);
  }
  SlopeExtremes e;
  e.min_slope = all.min_slope;
  e.min_t1 = grid[all.min_i];
  e.min_t2 = grid[all.min_j];
  e.max_slope = all.max_slope;
  e.max_t1 = grid[all.max_i];
  e.max_t2 = grid[all.max_j];
  return e;
}

Interval realize_window(const Profile& alpha, const Interval& z_window) {
  if (!(z_window.hi >= z_window.lo)) {
    throw UsageError("window needs lo <= hi");
  }
  auto eta = [&](double w) { return eta_of(alpha, w); };
  double step = std::max(1.0, z_window.length());
  double wl = z_window.lo;
  int it = 0;
  while (!(eta(wl) <= z_window.lo)) {
    wl -= step;
    step *= 2.0;
    if (++it > 60) throw DomainError("eta does not reach the window bottom");
  }
  step = std::max(1.0, z_window.length());
  double wh = z_window.hi;
  it = 0;
  while (!(eta(wh) >= z_window.hi)) {
    wh += step;
    step *= 2.0;
    if (++it > 60) throw DomainError("eta does not reach the window top");
  }
  // Tighten to the outermost preimages of the endpoints when eta is monotone
  // there; otherwise keep the bracket.
  const double lo = solve_increasing(eta, z_window.lo, wl, wh);
  double hi = -solve_increasing([&](double s) { return -eta(-s); },
                                -z_window.hi, -wh, -wl);
  if (!(lo < hi)) return {wl, wh};
  return {lo, hi};
}

namespace {

StripVerdict slope_verdict(const Profile& alpha, const Interval& w_range,
                           double bound, const StripOptions& opt) {
  StripVerdict out;
  out.w_range = w_range;
  const auto grid = alpha.grid(w_range.lo, w_range.hi, opt.grid_points);
  const SlopeExtremes e = pairwise_slopes(alpha, grid, opt);
  out.w1 = e.min_t1;
  out.w2 = e.min_t2;
  out.slope = e.min_slope;
  out.ok = e.min_slope >= bound - opt.eps_slope;
  return out;
}

}  // namespace

StripVerdict is_graphical_strip(const Profile& alpha, const Interval& z_window,
                                const StripOptions& opt) {
  Interval w_range;
  bool covered = true;
  try {
    w_range = realize_window(alpha, z_window);
  } catch (const DomainError&) {
    covered = false;
    const double pad = std::max(1.0, z_window.length());
    w_range = {z_window.lo - pad, z_window.hi + pad};
  }
  StripVerdict v = slope_verdict(alpha, w_range, -2.0, opt);
  if (!v.ok) {
    v.reason = "pairwise slope below -2";
  } else if (!covered) {
    v.ok = false;
    v.reason = "eta does not cover the window";
  }
  return v;
}

StripVerdict is_area_minimizing(const Profile& alpha, const Interval& z_window,
                                const StripOptions& opt) {
  const StripVerdict strip = is_graphical_strip(alpha, z_window, opt);
  if (!strip.ok) throw DomainError("not a graphical strip: " + strip.reason);
  StripVerdict v = slope_verdict(alpha, strip.w_range, -1.0, opt);
  if (!v.ok) v.reason = "pairwise slope below -1";
  return v;
}

Profile alpha_to_sigma(const Profile& alpha, const Interval& w_range,
                       int grid_points) {
  const auto w = alpha.grid(w_range.lo, w_range.hi, grid_points);
  std::vector<double> z(w.size());
  std::vector<double> s(w.size());
  for (std::size_t k = 0; k < w.size(); ++k) {
    s[k] = alpha(w[k]);
    z[k] = w[k] + 0.5 * s[k];
  }
  for (std::size_t k = 1; k < w.size(); ++k) {
    const double dz = z[k] - z[k - 1];
    if (dz < 0.0) throw DomainError("eta decreasing: not a graphical strip");
    if (dz <= 1e-12 * (w[k] - w[k - 1])) {
      throw DomainError("sigma multivalued (slope -2 plateau)");
    }
  }
  return Profile::samples(std::move(z), std::move(s));
}

Profile sigma_to_alpha(const Profile& sigma, const Interval& z_range,
                       int grid_points) {
  const auto z = sigma.grid(z_range.lo, z_range.hi, grid_points);
  std::vector<double> w(z.size());
  std::vector<double> a(z.size());
  for (std::size_t k = 0; k < z.size(); ++k) {
    a[k] = sigma(z[k]);
    w[k] = z[k] - 0.5 * a[k];
  }
  for (std::size_t k = 1; k < z.size(); ++k) {
    if ((a[k] - a[k - 1]) / (z[k] - z[k - 1]) >= 2.0 || !(w[k] > w[k - 1])) {
      throw DomainError("not an intrinsic graph (sigma slope reaches 2)");
    }
  }
  return Profile::samples(std::move(w), std::move(a));
}

BrokenPlane::BrokenPlane(double u) : u_(u) {
  if (!(u >= 0.0) || !std::isfinite(u)) {
    throw DomainError("broken plane needs finite u >= 0");
  }
}

double BrokenPlane::b(double x, double z) const {
  if (x == 0.0) return 0.0;
  const double edge = 0.5 * u_ * x * x;
  if (z < -edge) return u_ * x;
  if (z > edge) return -u_ * x;
  return -2.0 * z / x;
}

ScalarField BrokenPlane::field() const {
  const double u = u_;
  return ScalarField::closed(
      [u](double x, double z) { return BrokenPlane(u).b(x, z); });
}

Profile BrokenPlane::alpha() const { return Profile::broken_plane_alpha(u_); }

bool BrokenPlane::contains(const GroupPoint& p, double tol) const {
  const bool upper = p.z >= -tol && std::abs(p.y + u_ * p.x) <= tol;
  const bool lower = p.z <= tol && std::abs(p.y - u_ * p.x) <= tol;
  const bool wedge =
      std::abs(p.z) <= tol && std::abs(p.y) <= u_ * std::abs(p.x) + tol;
  return upper || lower || wedge;
}

BrokenPlane broken_plane(double u) { return BrokenPlane(u); }

ScalarField alpha_strip_field(const Profile& alpha) {
  return ScalarField::closed(
      [alpha](double x, double z) {
        if (x == 0.0) return 0.0;
        const double c = 0.5 * (1.0 - x * x);
        // w + c alpha(w) is nondecreasing when |x| <= 1 and alpha is a strip.
        const double w = solve_increasing(
            [&](double t) { return t + c * alpha(t); }, z, z - 1.0, z + 1.0);
        return x * alpha(w);
      },
      Window{-1.0, 1.0});
}

RuledSurface strip_surface(const Profile& sigma, const Interval& z_window,
                           int rulings) {
  if (rulings < 2) throw UsageError("need at least two rulings");
  RuledSurface s;
  s.name = "strip";
  std::vector<Segment> fam;
  fam.reserve(static_cast<std::size_t>(rulings));
  for (int k = 0; k < rulings; ++k) {
    const double z = k == rulings - 1
                         ? z_window.hi
                         : z_window.lo + z_window.length() * k / (rulings - 1);
    const double m = sigma(z);
    fam.push_back({{-1.0, -m, z}, {1.0, m, z}});
  }
  s.families.push_back(std::move(fam));
  return s;
}

RuledSurface alpha_strip_surface(const Profile& alpha, const Interval& w_range,
                                 int rulings) {
  if (rulings < 2) throw UsageError("need at least two rulings");
  RuledSurface s;
  s.name = "alpha-strip";
  std::vector<Segment> fam;
  fam.reserve(static_cast<std::size_t>(rulings));
  for (int k = 0; k < rulings; ++k) {
    const double w = k == rulings - 1
                         ? w_range.hi
                         : w_range.lo + w_range.length() * k / (rulings - 1);
    const double a = alpha(w);
    const double e = w + 0.5 * a;
    fam.push_back({{-1.0, -a, e}, {1.0, a, e}});
  }
  s.families.push_back(std::move(fam));
  return s;
}

}  // namespace heis
