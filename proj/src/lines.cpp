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

#include "heis/lines.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "heis/error.hpp"
#include "heis/graphs.hpp"
#include "heis/quadrature.hpp"
#include "heis/strips.hpp"

namespace heis {

namespace {

constexpr double kPi = std::numbers::pi;

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Uniform double in [0, 1) from the top 53 bits.
double unit(std::uint64_t& state) {
  return static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53;
}

struct SamplingBox {
  double v = 0.0;
  double w = 0.0;
  double volume() const { return kPi * 2.0 * v * 2.0 * w; }
};

SamplingBox box_for(const Ball& b) {
  const double r = b.radius;
  const double rho = std::hypot(b.center.x, b.center.y);
  SamplingBox s;
  s.v = r + rho;
  s.w = 1.5 * r * r + std::abs(b.center.z) + 0.5 * rho * (r + rho) +
        0.5 * r * rho;
  return s;
}

LineSample draw(const SamplingBox& box, std::uint64_t& state) {
  LineSample l;
  l.theta = kPi * unit(state);
  l.v = box.v * (2.0 * unit(state) - 1.0);
  l.w = box.w * (2.0 * unit(state) - 1.0);
  return l;
}

}  // namespace

GroupPoint LineSample::at(double t) const {
  return rotate({t, v, w - 0.5 * v * t}, theta);
}

LineSample line_coordinates(const GroupPoint& p, double theta) {
  const GroupPoint q = rotate(p, -theta);
  return {theta, q.y, q.z + 0.5 * q.y * q.x};
}

bool line_meets_ball(const LineSample& line, const Ball& ball) {
  const LineSample l =
      line_coordinates(inverse(ball.center) * line.at(0.0), line.theta);
  const double v = l.v;
  const double w = l.w;
  // N(t) = (t^2 + v^2)^2 + (w - v t / 2)^2 has the single critical point
  // 4 t^3 + 4.5 v^2 t - v w = 0.
  double t = 0.0;
  if (v != 0.0) {
    const double p = 1.125 * v * v;
    const double q = -0.25 * v * w;
    const double disc = std::sqrt(0.25 * q * q + p * p * p / 27.0);
    t = std::cbrt(-0.5 * q + disc) + std::cbrt(-0.5 * q - disc);
    for (int i = 0; i < 3; ++i) {
      const double f = t * t * t + p * t + q;
      const double df = 3.0 * t * t + p;
      t -= f / df;
    }
  }
  const double a = t * t + v * v;
  const double c = w - 0.5 * v * t;
  const double r2 = ball.radius * ball.radius;
  return a * a + c * c <= r2 * r2;
}

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t s = seed ^ 0x6A09E667F3BCC909ULL;
  std::uint64_t mixed = splitmix64(s);
  std::uint64_t i = index + mixed;
  return splitmix64(i);
}

LineBatch sample_lines(const Ball& ball, std::size_t n, std::uint64_t seed) {
  if (n == 0) throw UsageError("need at least one line");
  if (!(ball.radius > 0.0)) throw UsageError("ball radius must be positive");
  const SamplingBox box = box_for(ball);
  LineBatch out;
  out.lines.resize(n);
  out.box_volume = box.volume();
  std::vector<std::uint64_t> tries(n, 0);
  parallel_for(n, [&](std::size_t i) {
    std::uint64_t state = stream_seed(seed, i);
    for (;;) {
      ++tries[i];
      const LineSample l = draw(box, state);
      if (line_meets_ball(l, ball)) {
        out.lines[i] = l;
        return;
      }
    }
  });
  for (std::uint64_t t : tries) out.attempts += t;
  return out;
}

MeasureEstimate line_measure(const Ball& ball, std::uint64_t attempts,
                             std::uint64_t seed) {
  if (attempts == 0) throw UsageError("need at least one attempt");
  const SamplingBox box = box_for(ball);
  std::vector<unsigned char> hit(attempts, 0);
  parallel_for(attempts, [&](std::size_t i) {
    std::uint64_t state = stream_seed(seed, i);
    hit[i] = line_meets_ball(draw(box, state), ball) ? 1 : 0;
  });
  MeasureEstimate m;
  m.attempts = attempts;
  for (unsigned char h : hit) m.accepted += h;
  const double p = static_cast<double>(m.accepted) / attempts;
  m.value = box.volume() * p;
  m.std_error = box.volume() * std::sqrt(p * (1.0 - p) / attempts);
  return m;
}

LineCrossings crossings(const CrossingSurface& s, const LineSample& line,
                        const CrossingOptions& opt) {
  LineCrossings out;
  const double c = std::cos(line.theta);
  const double sn = std::sin(line.theta);
  // Each coordinate is affine in t.
  const double a0[3] = {-line.v * sn, line.v * c, line.w};
  const double a1[3] = {c, sn, -0.5 * line.v};
  const double lo[3] = {s.box.x0, s.box.y0, s.box.z0};
  const double hi[3] = {s.box.x1, s.box.y1, s.box.z1};
  double tlo = -HUGE_VAL;
  double thi = HUGE_VAL;
  for (int k = 0; k < 3; ++k) {
    if (a1[k] == 0.0) {
      if (a0[k] < lo[k] || a0[k] > hi[k]) return out;
      continue;
    }
    double ta = (lo[k] - a0[k]) / a1[k];
    double tb = (hi[k] - a0[k]) / a1[k];
    if (ta > tb) std::swap(ta, tb);
    tlo = std::max(tlo, ta);
    thi = std::min(thi, tb);
  }
  if (!(tlo < thi)) return out;
  if (!std::isfinite(tlo) || !std::isfinite(thi)) {
    throw DomainError("crossing box is unbounded along the line");
  }
  const int m = std::max(opt.samples_per_line, 2);
  auto f = [&](double t) { return s.offset(line.at(t)); };
  double t_prev = tlo;
  bool s_prev = f(tlo) >= 0.0;
  std::vector<double> roots;
  for (int i = 1; i < m; ++i) {
    const double t = i == m - 1 ? thi : tlo + (thi - tlo) * i / (m - 1);
    const bool s_cur = f(t) >= 0.0;
    if (s_cur != s_prev) {
      double a = t_prev;
      double b = t;
      while (b - a > opt.root_tol) {
        const double mid = 0.5 * (a + b);
        if (mid <= a || mid >= b) break;
        if ((f(mid) >= 0.0) == s_prev) {
          a = mid;
        } else {
          b = mid;
        }
      }
      roots.push_back(0.5 * (a + b));
    }
    t_prev = t;
    s_prev = s_cur;
  }
  for (double r : roots) {
    if (!out.t.empty() && r - out.t.back() < opt.merge_tol) {
      out.degenerate = true;
      continue;
    }
    out.t.push_back(r);
  }
  return out;
}

CrossingReport monotonicity_check(const CrossingSurface& s, const Ball& ball,
                                  std::size_t n, std::uint64_t seed,
                                  const CrossingOptions& opt,
                                  std::size_t max_witnesses) {
  const LineBatch batch = sample_lines(ball, n, seed);
  std::vector<LineCrossings> found(n);
  parallel_for(n, [&](std::size_t i) {
    found[i] = crossings(s, batch.lines[i], opt);
  });
  CrossingReport rep;
  rep.surface = s.name;
  rep.seed = seed;
  rep.lines = n;
  rep.attempts = batch.attempts;
  for (std::size_t i = 0; i < n; ++i) {
    const LineCrossings& c = found[i];
    rep.total_crossings += c.t.size();
    if (!c.t.empty()) ++rep.crossing_lines;
    if (c.degenerate) {
      ++rep.degenerate;
      continue;
    }
    if (c.t.size() < 2) continue;
    ++rep.violations;
    if (rep.witnesses.size() >= max_witnesses) continue;
    Witness w;
    w.index = i;
    w.line = batch.lines[i];
    w.t = c.t;
    w.validated = true;
    for (double t : c.t) {
      w.points.push_back(batch.lines[i].at(t));
      if (s.on_surface && !s.on_surface(w.points.back())) w.validated = false;
    }
    for (std::size_t a = 0; a < w.points.size(); ++a) {
      for (std::size_t b = a + 1; b < w.points.size(); ++b) {
        w.max_chord_offset =
            std::max(w.max_chord_offset,
                     std::abs(horizontal_chord_offset(w.points[a],
                                                      w.points[b])));
      }
    }
    if (!(w.max_chord_offset <= 1e-12)) w.validated = false;
    rep.witnesses.push_back(std::move(w));
  }
  return rep;
}

namespace {

double max_abs_on(const Profile& p, double lo, double hi) {
  double m = 0.0;
  for (double t : p.grid(lo, hi, 2001)) m = std::max(m, std::abs(p(t)));
  return m;
}

void check_window(double z0, double z1) {
  if (!(z1 > z0) || !std::isfinite(z0) || !std::isfinite(z1)) {
    throw UsageError("crossing window needs finite z0 < z1");
  }
}

}  // namespace

CrossingSurface sigma_crossing_surface(const Profile& sigma, double z0,
                                       double z1) {
  check_window(z0, z1);
  const double ymax = max_abs_on(sigma, z0, z1) + 0.5;
  CrossingSurface s;
  s.name = "sigma-strip";
  // On each plane x = const the strip is y = x sigma(z); this has the sign
  // of y - f(Pi(p)) because sigma has slopes below 2.
  s.offset = [sigma](const GroupPoint& p) { return p.y - p.x * sigma(p.z); };
  s.box = {-1.0, 1.0, -ymax, ymax, z0, z1};
  s.on_surface = [sigma](const GroupPoint& p) {
    return std::abs(p.y - p.x * sigma(p.z)) <= 1e-8;
  };
  return s;
}

CrossingSurface broken_plane_crossing_surface(double u, double z0, double z1) {
  check_window(z0, z1);
  const BrokenPlane bp(u);
  CrossingSurface s;
  s.name = "broken-plane";
  s.offset = [bp](const GroupPoint& p) {
    return p.y - bp.b(p.x, p.z - 0.5 * p.x * p.y);
  };
  s.box = {-1.0, 1.0, -u - 0.5, u + 0.5, z0, z1};
  s.on_surface = [bp](const GroupPoint& p) { return bp.contains(p, 1e-8); };
  return s;
}

CrossingSurface alpha_crossing_surface(const Profile& alpha, double z0,
                                       double z1) {
  check_window(z0, z1);
  const Interval wr = realize_window(alpha, {z0, z1});
  const double ymax = max_abs_on(alpha, wr.lo, wr.hi) + 0.5;
  const ScalarField f = alpha_strip_field(alpha);
  CrossingSurface s;
  s.name = "alpha-strip";
  s.offset = [f](const GroupPoint& p) {
    return p.y - f(p.x, p.z - 0.5 * p.x * p.y);
  };
  s.box = {-1.0, 1.0, -ymax, ymax, z0, z1};
  s.on_surface = [f](const GroupPoint& p) {
    return std::abs(p.y - f(p.x, p.z - 0.5 * p.x * p.y)) <= 1e-8;
  };
  return s;
}

Ball bounding_ball(const CrossingSurface& s) {
  const Box3& b = s.box;
  const double zc = 0.5 * (b.z0 + b.z1);
  const double h = 0.5 * (b.z1 - b.z0);
  const double xm = std::max(std::abs(b.x0), std::abs(b.x1));
  const double ym = std::max(std::abs(b.y0), std::abs(b.y1));
  const double a = xm * xm + ym * ym;
  Ball ball;
  ball.center = {0.0, 0.0, zc};
  ball.radius = std::pow(a * a + h * h, 0.25);
  return ball;
}

CrossingReport monotonicity_check(const Profile& sigma, double z0, double z1,
                                  std::size_t n, std::uint64_t seed) {
  const CrossingSurface s = sigma_crossing_surface(sigma, z0, z1);
  return monotonicity_check(s, bounding_ball(s), n, seed);
}

PerimeterEstimate relative_perimeter(const CrossingSurface& e,
                                     const CrossingSurface& f,
                                     const Ball& ball, std::size_t n,
                                     std::uint64_t seed,
                                     const CrossingOptions& opt) {
  const LineBatch batch = sample_lines(ball, n, seed);
  std::vector<double> ce(n);
  std::vector<double> cf(n);
  parallel_for(n, [&](std::size_t i) {
    ce[i] = static_cast<double>(crossings(e, batch.lines[i], opt).t.size());
    cf[i] = static_cast<double>(crossings(f, batch.lines[i], opt).t.size());
  });
  auto stats = [n](const std::vector<double>& c, double& mean, double& se) {
    double s = 0.0;
    for (double x : c) s += x;
    mean = s / n;
    double ss = 0.0;
    for (double x : c) ss += (x - mean) * (x - mean);
    se = n > 1 ? std::sqrt(ss / (n - 1) / n) : 0.0;
  };
  PerimeterEstimate out;
  out.lines = n;
  stats(ce, out.mean_e, out.se_e);
  stats(cf, out.mean_f, out.se_f);
  return out;
}

}  // namespace heis
