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

#include "heis/families.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "heis/error.hpp"
#include "heis/roots.hpp"

namespace heis {

namespace {

constexpr double kPi = std::numbers::pi;

// Integral of sqrt(1 + v^2) over [0, m].
double G(double m) { return 0.5 * (m * std::sqrt(1.0 + m * m) + std::asinh(m)); }

double normalize_angle(double t) {
  t = std::fmod(t, kPi);
  if (t < 0.0) t += kPi;
  return t;
}

void check_nonincreasing(const Profile& p, const Interval& w, const char* what) {
  const std::vector<double> g = p.grid(w.lo, w.hi, 2001);
  for (std::size_t i = 1; i < g.size(); ++i) {
    if (p(g[i]) > p(g[i - 1]) + 1e-12) {
      throw UsageError(std::string(what) + " must be nonincreasing");
    }
  }
}

}  // namespace

RuledEntireGraph::RuledEntireGraph(Profile sigma_plus, Profile sigma_minus,
                                   Interval window)
    : plus_(std::move(sigma_plus)),
      minus_(std::move(sigma_minus)),
      window_(window) {
  if (!(window_.hi > window_.lo) || !std::isfinite(window_.lo) ||
      !std::isfinite(window_.hi)) {
    throw UsageError("window must be a bounded nondegenerate interval");
  }
  check_nonincreasing(plus_, window_, "sigma_plus");
  check_nonincreasing(minus_, window_, "sigma_minus");
  const std::vector<double> g = plus_.grid(window_.lo, window_.hi, 2001);
  for (double z : g) {
    if (minus_(z) > plus_(z) + 1e-12) {
      throw UsageError("sigma_minus must not exceed sigma_plus");
    }
  }
}

RuledEntireGraph RuledEntireGraph::single(Profile sigma, Interval window) {
  return RuledEntireGraph(sigma, sigma, window);
}

double RuledEntireGraph::f(double x, double z) const {
  if (x == 0.0) return 0.0;
  const double x2 = x * x;
  auto G = [&](double z0) { return z0 - 0.5 * x2 * minus_(z0); };
  double lo = window_.lo;
  double hi = window_.hi;
  if (!(G(lo) < z) || !(G(hi) >= z)) throw DomainError("window too small");
  // Invariant G(lo) < z <= G(hi).
  for (int it = 0; it < 200; ++it) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    if (G(mid) < z) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double m = std::clamp(2.0 * (hi - z) / x2, minus_(hi), plus_(lo));
  return x * m;
}

double RuledEntireGraph::f_t(double t, double x, double z) const {
  return f(t * x, t * t * z) / t;
}

double limit_function(double m, double M, double x, double z) {
  if (x == 0.0) return 0.0;
  const double x2 = x * x;
  if (z < -0.5 * m * x2) return m * x;
  if (z > -0.5 * M * x2) return M * x;
  return -2.0 * z / x;
}

double tail_limit(const Profile& p, double z_abs_max, int sign) {
  if (!(z_abs_max > 0.0)) throw UsageError("tail window must be positive");
  const int n = 201;
  // Normal equations for c0 + c1 s + c2 s^2 with s = 1/z.
  double a[3][4] = {};
  for (int k = 0; k < n; ++k) {
    const double z = sign * (0.1 * z_abs_max +
                             0.9 * z_abs_max * static_cast<double>(k) / (n - 1));
    const double s = 1.0 / z;
    const double b[3] = {1.0, s, s * s};
    const double v = p(z);
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) a[i][j] += b[i] * b[j];
      a[i][3] += b[i] * v;
    }
  }
  for (int c = 0; c < 3; ++c) {
    int piv = c;
    for (int r = c + 1; r < 3; ++r) {
      if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
    }
    std::swap(a[c], a[piv]);
    for (int r = 0; r < 3; ++r) {
      if (r == c) continue;
      const double f = a[r][c] / a[c][c];
      for (int j = c; j < 4; ++j) a[r][j] -= f * a[c][j];
    }
  }
  return a[0][3] / a[0][0];
}

std::pair<double, double> classify_broken_plane(double m, double M) {
  const double am = std::atan(m);
  const double aM = std::atan(M);
  if (std::abs(am - aM) < 1e-6) return {0.0, normalize_angle(aM)};
  return {std::tan(0.5 * (am - aM)), normalize_angle(0.5 * (am + aM))};
}

std::vector<V0Point> default_probes() {
  std::vector<V0Point> out;
  for (double x : {-1.0, -0.5, 0.5, 1.0}) {
    for (double z : {-1.0, -0.3, -0.1, 0.1, 0.3, 1.0}) out.push_back({x, z});
  }
  return out;
}

ScalingLimitReport scaling_limit(const RuledEntireGraph& g,
                                 const std::vector<double>& t_grid,
                                 const std::vector<V0Point>& probes) {
  if (t_grid.empty()) throw UsageError("t grid is empty");
  for (double t : t_grid) {
    if (!(t > 0.0)) throw UsageError("t values must be positive");
  }
  ScalingLimitReport rep;
  const double Z = std::max(std::abs(g.window().lo), std::abs(g.window().hi));
  const double Zp = std::min(std::abs(g.window().hi), Z);
  const double Zm = std::min(std::abs(g.window().lo), Z);
  rep.m_inf = tail_limit(g.sigma_plus(), Zp, 1);
  rep.m_minus_inf = tail_limit(g.sigma_plus(), Zm, -1);
  const auto [u, theta] = classify_broken_plane(rep.m_minus_inf, rep.m_inf);
  rep.u = u;
  rep.theta = theta;
  rep.plane = u == 0.0;
  rep.t_grid = t_grid;
  rep.probes = probes;
  for (double t : t_grid) {
    std::vector<double> e;
    double worst = 0.0;
    for (const V0Point& p : probes) {
      const double v = g.f_t(t, p.x, p.z);
      const double lim = limit_function(rep.m_minus_inf, rep.m_inf, p.x, p.z);
      e.push_back(std::abs(v - lim));
      worst = std::max(worst, e.back());
    }
    rep.errors.push_back(std::move(e));
    rep.max_error.push_back(worst);
  }
  return rep;
}

double sigma_rho_g(double z1, double z2, double x) {
  return 0.5 * z1 * (x - 1.0) * (x - 1.0) + 0.5 * z2 * (x + 1.0) * (x + 1.0);
}

namespace {

void check_increasing(const Profile& rho, double lo, double hi) {
  const std::vector<double> g = rho.grid(lo, hi, 2001);
  for (std::size_t i = 1; i < g.size(); ++i) {
    if (!(rho(g[i]) > rho(g[i - 1]))) {
      throw DomainError("rho must be strictly increasing");
    }
  }
}

}  // namespace

RuledSurface sigma_rho_surface(const Profile& rho, const Interval& window,
                               int rulings) {
  if (!(window.hi > window.lo)) throw UsageError("empty window");
  if (rulings < 2) throw UsageError("need at least two rulings");
  check_increasing(rho, window.lo, window.hi);
  RuledSurface s;
  s.name = "sigma-rho";
  s.families.emplace_back();
  for (int k = 0; k < rulings; ++k) {
    const double z = window.lo + window.length() * k / (rulings - 1);
    const double r = rho(z);
    s.families[0].push_back({{-1.0, 2.0 * z, z}, {1.0, -2.0 * r, r}});
  }
  return s;
}

double sigma_rho_area(const Profile& rho, double a, double b) {
  if (a == b) return 0.0;
  if (a > b) throw DomainError("area interval needs a < b");
  return 4.0 / 3.0 * (G(b + rho(b)) - G(a + rho(a)));
}

double sigma_rho_area_quadrature(const Profile& rho, double a, double b) {
  if (a == b) return 0.0;
  if (a > b) throw DomainError("area interval needs a < b");
  return integrate_1d(
      [&](double z) {
        const double s = z + rho(z);
        return 4.0 / 3.0 * (1.0 + rho.derivative(z)) * std::sqrt(1.0 + s * s);
      },
      a, b, rho.kinks());
}

ChordObstruction chord_obstruction_check(const Profile& rho, double z1,
                                         double z2, std::uint64_t samples,
                                         std::uint64_t seed) {
  if (z1 == z2) throw UsageError("the two rulings coincide");
  if (z1 > z2) std::swap(z1, z2);
  const double a1 = z1, a2 = z2;
  const double b1 = rho(z1), b2 = rho(z2);
  if (!(b2 > b1)) throw DomainError("rho must be strictly increasing");
  const double x0 = -1.0 + 2.0 * (a2 - a1) / (a2 + b2 - a1 - b1);
  auto q_on = [&](double a, double b) {
    const GroupPoint start{-1.0, 2.0 * a, a};
    return start * GroupPoint{x0 + 1.0, -(x0 + 1.0) * (a + b), 0.0};
  };
  const GroupPoint q1 = q_on(a1, b1);
  const GroupPoint q2 = q_on(a2, b2);
  const GroupPoint v1{1.0, -a1 - b1, 0.0};
  const GroupPoint v2{1.0, -a2 - b2, 0.0};
  const double w = 0.5 * (a1 - a2 + b1 - b2);
  const double s0 = -1.0 - x0;
  const double t0 = 1.0 - x0;
  auto at = [](const GroupPoint& q, const GroupPoint& v, double s) {
    return q * GroupPoint{s * v.x, s * v.y, 0.0};
  };
  ChordObstruction out;
  out.endpoint_offset =
      horizontal_chord_offset(at(q1, v1, s0), at(q2, v2, t0));
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(s0, t0);
  out.min_abs_offset = std::numeric_limits<double>::infinity();
  bool zero = false;
  bool pos = false;
  bool neg = false;
  for (std::uint64_t k = 0; k < samples; ++k) {
    const double s = uni(rng);
    const double t = uni(rng);
    if (s == s0 || t == s0) continue;
    const double off = horizontal_chord_offset(at(q1, v1, s), at(q2, v2, t));
    ++out.pairs;
    out.min_abs_offset = std::min(out.min_abs_offset, std::abs(off));
    out.max_formula_deviation = std::max(
        out.max_formula_deviation, std::abs(off - w * (s0 * t0 - s * t)));
    zero = zero || off == 0.0;
    pos = pos || off > 0.0;
    neg = neg || off < 0.0;
  }
  out.no_chord = !zero && !(pos && neg);
  return out;
}

CrossingSurface sigma_rho_crossing_surface(const Profile& rho, double z0,
                                           double z1) {
  if (!(z1 > z0)) throw UsageError("empty window");
  // Rulings reaching the slab have parameter in rho^{-1}[z0, z1] union [z0, z1].
  double plo = z0, phi = z1;
  try {
    plo = std::min(plo, solve_increasing(rho, z0, z0 - 1.0, z0 + 1.0));
    phi = std::max(phi, solve_increasing(rho, z1, z1 - 1.0, z1 + 1.0));
  } catch (const NumericError&) {
    plo = z0 - 10.0 * (z1 - z0);
    phi = z1 + 10.0 * (z1 - z0);
  }
  check_increasing(rho, plo, phi);
  double ymax = 0.0;
  for (double z : rho.grid(plo, phi, 401)) {
    ymax = std::max(ymax, 4.0 * std::abs(z) + 2.0 * std::abs(rho(z)));
  }
  ymax += 0.5;
  auto y_on = [rho](double x, double zpi) {
    if (x == -1.0) return zpi;
    const double z = solve_increasing(
        [&](double t) { return sigma_rho_g(t, rho(t), x); }, zpi, zpi - 1.0,
        zpi + 1.0);
    return 2.0 * z - (x + 1.0) * (z + rho(z));
  };
  CrossingSurface s;
  s.name = "sigma-rho";
  s.offset = [y_on](const GroupPoint& p) {
    return p.y - y_on(p.x, p.z - 0.5 * p.x * p.y);
  };
  s.box = {-1.0, 1.0, -ymax, ymax, z0, z1};
  s.on_surface = [y_on](const GroupPoint& p) {
    return std::abs(p.y - y_on(p.x, p.z - 0.5 * p.x * p.y)) <= 1e-8;
  };
  return s;
}

double Hyperbola::y(double x) const {
  const double v = (x + 1.0) / B;
  return -A * std::sqrt(1.0 + v * v);
}

double Hyperbola::dy(double x) const {
  const double v = (x + 1.0) / B;
  return -A * v / (B * std::sqrt(1.0 + v * v));
}

Hyperbola competitor_hyperbola(double u) {
  if (!(u > 0.0) || !std::isfinite(u)) throw DomainError("u must be positive");
  Hyperbola h;
  h.u = u;
  h.A = std::sqrt(u * u + 1.0) - 1.0;
  h.B = std::sqrt(u * u - h.A * h.A);
  return h;
}

double competitor_a(double u) { return competitor_hyperbola(u).y(0.0); }

double competitor_lift_z(double u, double x) {
  const Hyperbola h = competitor_hyperbola(u);
  const double a = h.y(0.0);
  return -0.5 * a + 0.5 * x * h.y(x) +
         h.A * h.B * (G((x + 1.0) / h.B) - G(1.0 / h.B));
}

double competitor_b(double u) { return competitor_lift_z(u, 1.0); }

double competitor_b_polygon(double u, int n) {
  if (n < 2) throw UsageError("polygon needs at least two vertices");
  const Hyperbola h = competitor_hyperbola(u);
  std::vector<PlanarPoint> v;
  v.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double x = static_cast<double>(k) / (n - 1);
    v.push_back({x, h.y(x)});
  }
  const LiftedCurve c = horizontal_lift(PlanarCurve(std::move(v)), -0.5 * h.y(0));
  return c.vertices.back().z;
}

std::pair<double, double> harmonic_slopes(double u, double t) {
  return {-0.5 * u + u / (1.0 + t), -0.5 * u - u / (1.0 + t)};
}

double tangent_bisection_defect(double u, double x) {
  const Hyperbola h = competitor_hyperbola(u);
  const double px = x, py = h.y(x);
  const double tx = 1.0, ty = h.dy(x);
  auto angle = [&](double fx, double fy) {
    const double ex = fx - px, ey = fy - py;
    return std::abs(std::atan2(tx * ey - ty * ex, tx * ex + ty * ey));
  };
  const double a1 = angle(-1.0, u);
  const double a2 = angle(-1.0, -u);
  return std::abs(a1 - a2);
}

namespace {

// Point of the horizontal segment from p towards planar point (fx, fy) at
// fraction r.
GroupPoint toward(const GroupPoint& p, double fx, double fy, double r) {
  return horizontal_step(p, r * (fx - p.x), r * (fy - p.y));
}

struct NexusCurve {
  std::function<GroupPoint(double)> at;  // parameter in [0, 1]
  std::function<void(double, double&, double&)> d;  // planar derivative
};

NexusCurve nexus_of(CompetitorKind kind, double u) {
  NexusCurve c;
  if (kind == CompetitorKind::kMinimal) {
    const Hyperbola h = competitor_hyperbola(u);
    c.at = [h, u](double s) {
      return GroupPoint{s, h.y(s), competitor_lift_z(u, s)};
    };
    c.d = [h](double s, double& dx, double& dy) {
      dx = 1.0;
      dy = h.dy(s);
    };
  } else {
    c.at = [u](double t) {
      return GroupPoint{t, -0.5 * u * (1.0 + t), 0.25 * u * (1.0 + t)};
    };
    c.d = [u](double, double& dx, double& dy) {
      dx = 1.0;
      dy = -0.5 * u;
    };
  }
  return c;
}

void check_window(double u, const Interval& w) {
  if (!(w.hi > w.lo)) throw UsageError("empty window");
  const bool contains = w.lo <= -u && w.hi >= u;
  const bool misses = w.hi <= -u || w.lo >= u;
  if (!contains && !misses) {
    throw UsageError("window must contain [-u, u] or miss it");
  }
}

}  // namespace

CompetitorSurface build_competitor(CompetitorKind kind, double u,
                                   int resolution, double z_top) {
  if (!(u > 0.0) || !std::isfinite(u)) throw DomainError("u must be positive");
  if (resolution < 2) throw UsageError("resolution must be at least 2");
  if (z_top == 0.0) z_top = 2.0 * u;
  CompetitorSurface c;
  c.kind = kind;
  c.u = u;
  const NexusCurve nx = nexus_of(kind, u);
  c.nexus_start = nx.at(0.0);
  c.nexus_end = nx.at(1.0);
  double z3_hi = 0.5 * u;  // top of the slope 0 family
  if (kind == CompetitorKind::kMinimal) {
    c.a = competitor_a(u);
    c.b = competitor_b(u);
    z3_hi = c.b;
  }
  if (z_top < z3_hi) throw UsageError("z_top below the nexus end");
  const int n = resolution;
  auto param = [n](int k, double lo, double hi) {
    return lo + (hi - lo) * static_cast<double>(k) / n;
  };
  std::vector<Segment> f1, f2u, f2l, f3, f4;
  const GroupPoint apex = c.nexus_start;
  for (int k = 0; k <= n; ++k) {
    const double y = param(k, -u, u);
    f1.push_back({apex, toward(apex, -1.0, y, 1.0)});
  }
  for (int k = 0; k <= n; ++k) {
    const GroupPoint p = nx.at(param(k, 0.0, 1.0));
    f2u.push_back({p, toward(p, -1.0, u, 1.0)});
    f2l.push_back({p, toward(p, -1.0, -u, 1.0)});
  }
  // Family (3) lies in the plane y = -u (minimal) or has slope -u.
  const double y3 = kind == CompetitorKind::kMinimal ? -u : u;
  const double z3_top = kind == CompetitorKind::kMinimal ? c.b : z_top;
  for (int k = 0; k <= n; ++k) {
    const double z = param(k, 0.5 * u, z3_top);
    const GroupPoint end{1.0, -u, z};
    f3.push_back({toward(end, -1.0, y3, 1.0), end});
  }
  if (kind == CompetitorKind::kMinimal) {
    for (int k = 0; k <= n; ++k) {
      const double z = param(k, c.b, z_top);
      f4.push_back({{-1.0, u, z}, {1.0, -u, z}});
    }
  }
  c.half.name = kind == CompetitorKind::kMinimal ? "competitor-minimal-half"
                                                 : "competitor-harmonic-half";
  c.half.families = {f1, f2u, f2l, f3};
  if (!f4.empty()) c.half.families.push_back(f4);
  const RuledSurface mirror =
      c.half.transformed(Similarity::dilation(-1.0, 1.0), "mirror");
  c.full.name = kind == CompetitorKind::kMinimal ? "competitor-minimal"
                                                 : "competitor-harmonic";
  c.full.families = c.half.families;
  for (const auto& fam : mirror.families) c.full.families.push_back(fam);
  return c;
}

Interval default_competitor_window(double u) { return {-2.0 * u, 2.0 * u}; }

namespace {

struct PieceSums {
  double area = 0.0;
  double energy = 0.0;
};

// Area and energy of the fan pieces (1) and (2) of one half.
PieceSums fan_pieces(CompetitorKind kind, double u, const QuadConfig& cfg) {
  const NexusCurve nx = nexus_of(kind, u);
  const GroupPoint apex = nx.at(0.0);
  PieceSums out;
  // (1): segments from the apex to (-1, y), y in [-u, u].
  {
    Region reg;
    reg.map = [apex, u](double s, double r, double& x, double& y, double& jac) {
      const double ey = -u + 2.0 * u * s;
      x = apex.x + r * (-1.0 - apex.x);
      y = apex.y + r * (ey - apex.y);
      // d(x,y)/ds = (0, 2u r), d(x,y)/dr = (-1 - apex.x, ey - apex.y)
      jac = -2.0 * u * r * (-1.0 - apex.x);
    };
    reg.x_lo = -1.0;
    reg.x_hi = 0.0;
    reg.v_lo = -u;
    reg.v_hi = u;
    const PatchHeight z = [apex, u](double s, double r) {
      return toward(apex, -1.0, -u + 2.0 * u * s, r).z;
    };
    out.area += zgraph_patch_area(z, reg, cfg).value;
    out.energy += zgraph_patch_energy(z, reg, cfg).value;
  }
  // (2): segments from the nexus to each focus.
  for (double fy : {u, -u}) {
    Region reg;
    reg.map = [nx, fy](double s, double r, double& x, double& y, double& jac) {
      const GroupPoint p = nx.at(s);
      double dx, dy;
      nx.d(s, dx, dy);
      x = p.x + r * (-1.0 - p.x);
      y = p.y + r * (fy - p.y);
      jac = (1.0 - r) * (dx * (fy - p.y) - dy * (-1.0 - p.x));
    };
    reg.x_lo = -1.0;
    reg.x_hi = 1.0;
    reg.v_lo = -u;
    reg.v_hi = u;
    const PatchHeight z = [nx, fy](double s, double r) {
      return toward(nx.at(s), -1.0, fy, r).z;
    };
    out.area += zgraph_patch_area(z, reg, cfg).value;
    out.energy += zgraph_patch_energy(z, reg, cfg).value;
  }
  return out;
}

}  // namespace

CompetitorComparison competitor_compare(double u, const Interval& window,
                                        const QuadConfig& cfg) {
  if (!(u > 0.0) || !std::isfinite(u)) throw DomainError("u must be positive");
  check_window(u, window);
  CompetitorComparison c;
  c.u = u;
  c.window = window;
  const double sq = std::sqrt(1.0 + u * u);
  const double len = window.length();
  if (window.hi <= -u || window.lo >= u) {
    c.area_minimal = c.area_harmonic = c.area_wu = 2.0 * sq * len;
    c.energy_minimal = c.energy_harmonic = c.energy_wu = u * u * len;
    return c;
  }
  // The wedge of W_u is the flat Z-graph over |y| <= u |x|.
  Region wedge;
  wedge.map = [u](double s, double r, double& x, double& y, double& jac) {
    x = -1.0 + 2.0 * s;
    y = u * std::abs(x) * (2.0 * r - 1.0);
    jac = 2.0 * 2.0 * u * std::abs(x);
  };
  wedge.x_lo = -1.0;
  wedge.x_hi = 1.0;
  wedge.v_lo = -u;
  wedge.v_hi = u;
  const PlanarField flat = [](double, double) { return 0.0; };
  c.area_wu = zgraph_area(flat, wedge, cfg).value + 2.0 * sq * len;
  c.energy_wu = zgraph_energy(flat, wedge, cfg).value + u * u * len;

  const double b = competitor_b(u);
  const PieceSums pm = fan_pieces(CompetitorKind::kMinimal, u, cfg);
  const double a3 = 2.0 * (b - 0.5 * u);
  c.area_minimal = 2.0 * (pm.area + a3) +
                   2.0 * sq * ((window.hi - b) + (-b - window.lo));
  c.energy_minimal =
      2.0 * pm.energy + u * u * ((window.hi - b) + (-b - window.lo));

  const PieceSums ph = fan_pieces(CompetitorKind::kHarmonic, u, cfg);
  const double rest = (window.hi - 0.5 * u) + (-0.5 * u - window.lo);
  c.area_harmonic = 2.0 * ph.area + 2.0 * sq * rest;
  c.energy_harmonic = 2.0 * ph.energy + u * u * rest;
  return c;
}

}  // namespace heis
