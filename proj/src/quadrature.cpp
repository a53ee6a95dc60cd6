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

#include "heis/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <exception>
#include <thread>

#include "heis/error.hpp"

namespace heis {

unsigned worker_count() {
  const unsigned hw = std::thread::hardware_concurrency();
  return std::clamp(hw, 1u, 16u);
}

void parallel_for(std::size_t n,
                  const std::function<void(std::size_t)>& body) {
  if (n == 0) return;
  const std::size_t workers = std::min<std::size_t>(worker_count(), n);
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = n * w / workers;
    const std::size_t end = n * (w + 1) / workers;
    pool.emplace_back([&, w, begin, end] {
      try {
        for (std::size_t i = begin; i < end; ++i) body(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (std::thread& t : pool) t.join();
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

namespace {

constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

void gk15(const std::function<double(double)>& f, double a, double b,
          double& kronrod, double& gauss) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double k = fc * kWgk[7];
  double g = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = h * kXgk[j];
    const double s = f(c - dx) + f(c + dx);
    k += kWgk[j] * s;
    if (j % 2 == 1) g += kWg[j / 2] * s;
  }
  kronrod = k * h;
  gauss = g * h;
}

double adapt(const std::function<double(double)>& f, double a, double b,
             double tol, double rel_tol, int depth) {
  double k = 0.0;
  double g = 0.0;
  gk15(f, a, b, k, g);
  const double err = std::abs(k - g);
  if (err <= std::max(tol, rel_tol * std::abs(k)) || depth >= 48 ||
      !(b - a > 1e-15 * std::max(1.0, std::abs(a)))) {
    return k;
  }
  const double m = 0.5 * (a + b);
  return adapt(f, a, m, 0.5 * tol, rel_tol, depth + 1) +
         adapt(f, m, b, 0.5 * tol, rel_tol, depth + 1);
}

}  // namespace

double integrate_1d(const std::function<double(double)>& f, double a, double b,
                    const std::vector<double>& breaks, double abs_tol,
                    double rel_tol) {
  if (a == b) return 0.0;
  if (a > b) return -integrate_1d(f, b, a, breaks, abs_tol, rel_tol);
  std::vector<double> pts{a};
  for (double t : breaks) {
    if (t > a && t < b) pts.push_back(t);
  }
  std::sort(pts.begin() + 1, pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  pts.push_back(b);
  double total = 0.0;
  const double pieces = static_cast<double>(pts.size() - 1);
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    total += adapt(f, pts[i], pts[i + 1], abs_tol / pieces, rel_tol, 0);
  }
  return total;
}

Region Region::rect(double x0, double x1, double v0, double v1) {
  Region reg;
  reg.map = [=](double s, double r, double& x, double& v, double& jac) {
    x = x0 + s * (x1 - x0);
    v = v0 + r * (v1 - v0);
    jac = (x1 - x0) * (v1 - v0);
  };
  reg.x_lo = std::min(x0, x1);
  reg.x_hi = std::max(x0, x1);
  reg.v_lo = std::min(v0, v1);
  reg.v_hi = std::max(v0, v1);
  return reg;
}

Region Region::between(double x0, double x1, std::function<double(double)> lo,
                       std::function<double(double)> hi, double v_min,
                       double v_max) {
  Region reg;
  reg.map = [=](double s, double r, double& x, double& v, double& jac) {
    x = x0 + s * (x1 - x0);
    const double a = lo(x);
    const double b = hi(x);
    v = a + r * (b - a);
    jac = (x1 - x0) * std::max(0.0, b - a);
  };
  reg.x_lo = std::min(x0, x1);
  reg.x_hi = std::max(x0, x1);
  reg.v_lo = v_min;
  reg.v_hi = v_max;
  return reg;
}

Region Region::empty() { return Region{}; }

double Region::diagonal() const {
  return std::hypot(x_hi - x_lo, v_hi - v_lo);
}

QuadResult integrate_region(const std::function<double(const RegionPoint&)>& f,
                            const Region& region, const QuadConfig& cfg) {
  QuadResult res;
  if (region.is_empty()) return res;
  const int base = std::max(cfg.base_cells, 1);
  std::vector<double> mid;
  std::vector<double> rich;
  for (int level = 0; level <= cfg.max_levels; ++level) {
    const int n = base << level;
    const double h = 1.0 / n;
    std::vector<double> rows(static_cast<std::size_t>(n), 0.0);
    parallel_for(static_cast<std::size_t>(n), [&](std::size_t i) {
      double acc = 0.0;
      for (int j = 0; j < n; ++j) {
        RegionPoint p;
        p.s = (static_cast<double>(i) + 0.5) * h;
        p.r = (j + 0.5) * h;
        double jac = 0.0;
        region.map(p.s, p.r, p.x, p.v, jac);
        if (jac == 0.0) continue;
        if (region.mask && !region.mask(p.x, p.v)) continue;
        acc += f(p) * std::abs(jac);
      }
      rows[i] = acc;
    });
    double sum = 0.0;
    for (double r : rows) sum += r;
    mid.push_back(sum * h * h);
    res.levels = level + 1;
    res.cells_per_side = n;
    if (mid.size() >= 2) {
      const std::size_t k = mid.size() - 1;
      rich.push_back((4.0 * mid[k] - mid[k - 1]) / 3.0);
    }
    if (rich.size() >= 2) {
      const double cur = rich.back();
      const double prev = rich[rich.size() - 2];
      res.value = cur;
      res.previous = prev;
      if (std::abs(cur - prev) <= cfg.rel_tol * std::abs(cur) + cfg.abs_tol) {
        return res;
      }
    }
  }
  const double last = rich.empty() ? mid.back() : rich.back();
  const double prev =
      rich.size() >= 2 ? rich[rich.size() - 2] : (mid.size() >= 2 ? mid[0] : last);
  throw NumericError("quadrature did not converge", prev, last);
}

}  // namespace heis
