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

#include "heis/graphs.hpp"

#include <algorithm>
#include <cmath>

#include "heis/error.hpp"

namespace heis {

bool Window::bounded() const {
  return std::isfinite(x0) && std::isfinite(x1) && std::isfinite(z0) &&
         std::isfinite(z1);
}

double Window::diagonal() const { return std::hypot(x1 - x0, z1 - z0); }

ScalarField ScalarField::closed(Fn f, Window domain) {
  ScalarField s;
  s.f_ = std::move(f);
  s.domain_ = domain;
  return s;
}

ScalarField ScalarField::sampled(const Window& domain, int nx, int nz,
                                 std::vector<double> values) {
  if (!domain.bounded() || !(domain.x1 > domain.x0) ||
      !(domain.z1 > domain.z0)) {
    throw UsageError("sampled field needs a bounded, nondegenerate window");
  }
  if (nx < 1 || nz < 1 ||
      values.size() != static_cast<std::size_t>((nx + 1) * (nz + 1))) {
    throw UsageError("sampled field has the wrong number of values");
  }
  for (double v : values) {
    if (!std::isfinite(v)) throw UsageError("sampled field must be finite");
  }
  ScalarField s;
  s.domain_ = domain;
  s.nx_ = nx;
  s.nz_ = nz;
  s.values_ = std::move(values);
  return s;
}

ScalarField ScalarField::sample_from(const Fn& f, const Window& domain, int nx,
                                     int nz) {
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>((nx + 1) * (nz + 1)));
  for (int i = 0; i <= nx; ++i) {
    const double x = domain.x0 + (domain.x1 - domain.x0) * i / nx;
    for (int j = 0; j <= nz; ++j) {
      const double z = domain.z0 + (domain.z1 - domain.z0) * j / nz;
      values.push_back(f(x, z));
    }
  }
  return sampled(domain, nx, nz, std::move(values));
}

double ScalarField::operator()(double x, double z) const {
  if (nx_ == 0) return f_(x, z);
  const double sx = (x - domain_.x0) / (domain_.x1 - domain_.x0) * nx_;
  const double sz = (z - domain_.z0) / (domain_.z1 - domain_.z0) * nz_;
  const int i = std::clamp(static_cast<int>(std::floor(sx)), 0, nx_ - 1);
  const int j = std::clamp(static_cast<int>(std::floor(sz)), 0, nz_ - 1);
  const double a = std::clamp(sx - i, 0.0, 1.0);
  const double b = std::clamp(sz - j, 0.0, 1.0);
  auto at = [&](int ii, int jj) {
    return values_[static_cast<std::size_t>(ii * (nz_ + 1) + jj)];
  };
  return (1 - a) * (1 - b) * at(i, j) + a * (1 - b) * at(i + 1, j) +
         (1 - a) * b * at(i, j + 1) + a * b * at(i + 1, j + 1);
}

double intrinsic_gradient(const ScalarField& f, const V0Point& u, double h) {
  const Window& d = f.domain();
  if (!d.contains(u.x - h, u.z) || !d.contains(u.x + h, u.z) ||
      !d.contains(u.x, u.z - h) || !d.contains(u.x, u.z + h)) {
    throw DomainError("boundary stencil");
  }
  const double fx = (f(u.x + h, u.z) - f(u.x - h, u.z)) / (2.0 * h);
  const double fz = (f(u.x, u.z + h) - f(u.x, u.z - h)) / (2.0 * h);
  return fx - f(u.x, u.z) * fz;
}

namespace {

double step_for(const Region& w, const QuadConfig& cfg) {
  return cfg.grad_step > 0.0 ? cfg.grad_step : 1e-6 * w.diagonal();
}

}  // namespace

QuadResult graph_area(const ScalarField& f, const Region& w,
                      const QuadConfig& cfg) {
  const double h = step_for(w, cfg);
  return integrate_region(
      [&](const RegionPoint& p) {
        const double g = intrinsic_gradient(f, {p.x, p.v}, h);
        return std::sqrt(1.0 + g * g);
      },
      w, cfg);
}

QuadResult dirichlet_energy(const ScalarField& f, const Region& w,
                            const QuadConfig& cfg) {
  const double h = step_for(w, cfg);
  return integrate_region(
      [&](const RegionPoint& p) {
        const double g = intrinsic_gradient(f, {p.x, p.v}, h);
        return 0.5 * g * g;
      },
      w, cfg);
}

CharacteristicCurve characteristic_curve(const ScalarField& f,
                                         const V0Point& p0, double x_end,
                                         double step,
                                         double lipschitz_threshold) {
  const Window& d = f.domain();
  if (!d.contains(p0.x, p0.z)) {
    throw DomainError("characteristic curve starts outside the domain");
  }
  if (!(step > 0.0)) throw UsageError("step must be positive");
  CharacteristicCurve c;
  c.x.push_back(p0.x);
  c.g.push_back(p0.z);
  if (x_end == p0.x) return c;
  const double dir = x_end > p0.x ? 1.0 : -1.0;
  double x = p0.x;
  double g = p0.z;
  auto rhs = [&](double xx, double gg, bool& ok) {
    if (!d.contains(xx, gg)) {
      ok = false;
      return 0.0;
    }
    return -f(xx, gg);
  };
  while (dir * (x_end - x) > 0.0) {
    const double hstep = dir * std::min(step, std::abs(x_end - x));
    bool ok = true;
    const double k1 = rhs(x, g, ok);
    const double k2 = rhs(x + 0.5 * hstep, g + 0.5 * hstep * k1, ok);
    const double k3 = rhs(x + 0.5 * hstep, g + 0.5 * hstep * k2, ok);
    const double k4 = rhs(x + hstep, g + hstep * k3, ok);
    const double gn = g + hstep * (k1 + 2.0 * k2 + 2.0 * k3 + k4) / 6.0;
    const double xn = std::abs(x_end - x) <= step ? x_end : x + hstep;
    if (!ok || !d.contains(xn, gn)) {
      if (c.x.size() == 1) {
        throw DomainError("characteristic curve leaves the domain at once");
      }
      c.truncated = true;
      break;
    }
    x = xn;
    g = gn;
    c.x.push_back(x);
    c.g.push_back(g);
    const double e = 1e-6 * (1.0 + std::abs(g));
    if (d.contains(x, g - e) && d.contains(x, g + e)) {
      const double fz = (f(x, g + e) - f(x, g - e)) / (2.0 * e);
      if (!(std::abs(fz) <= lipschitz_threshold)) {
        c.uniqueness_not_guaranteed = true;
      }
    }
  }
  return c;
}

PlanarCurve::PlanarCurve(std::vector<PlanarPoint> vertices)
    : vertices_(std::move(vertices)) {
  for (std::size_t i = 1; i < vertices_.size(); ++i) {
    if (vertices_[i].x == vertices_[i - 1].x &&
        vertices_[i].y == vertices_[i - 1].y) {
      throw UsageError("consecutive curve vertices coincide");
    }
  }
}

LiftedCurve horizontal_lift(const PlanarCurve& c, double z0) {
  const auto& v = c.vertices();
  if (v.size() < 2) throw UsageError("lift needs at least two vertices");
  LiftedCurve out;
  out.vertices.reserve(v.size());
  double z = z0;
  out.vertices.push_back({v[0].x, v[0].y, z});
  for (std::size_t k = 0; k + 1 < v.size(); ++k) {
    const double dx = v[k + 1].x - v[k].x;
    const double dy = v[k + 1].y - v[k].y;
    z += 0.5 * (v[k].x * dy - v[k].y * dx);
    out.vertices.push_back({v[k + 1].x, v[k + 1].y, z});
  }
  for (std::size_t k = 0; k + 1 < out.vertices.size(); ++k) {
    out.horizontality_residual =
        std::max(out.horizontality_residual,
                 std::abs(horizontal_chord_offset(out.vertices[k],
                                                  out.vertices[k + 1])));
  }
  return out;
}

namespace {

// Horizontal gradient (phi_x + y/2, phi_y - x/2) of a Z-graph.
void zgraph_gradient(const PlanarField& phi, double x, double y, double h,
                     double& g1, double& g2) {
  const double px = (phi(x + h, y) - phi(x - h, y)) / (2.0 * h);
  const double py = (phi(x, y + h) - phi(x, y - h)) / (2.0 * h);
  g1 = px + 0.5 * y;
  g2 = py - 0.5 * x;
}

// For a patch: returns (G1, G2, D) where (G1, G2) = D * horizontal gradient
// and D is the finite-difference Jacobian of the region map.
void patch_gradient(const PatchHeight& z, const Region& reg, double s, double r,
                    double& G1, double& G2, double& D) {
  const double e = 1e-6;
  double xa, ya, xb, yb, xc, yc, xd, yd, jac;
  reg.map(s + e, r, xa, ya, jac);
  reg.map(s - e, r, xb, yb, jac);
  reg.map(s, r + e, xc, yc, jac);
  reg.map(s, r - e, xd, yd, jac);
  double x, y;
  reg.map(s, r, x, y, jac);
  const double xs = (xa - xb) / (2 * e);
  const double ys = (ya - yb) / (2 * e);
  const double xr = (xc - xd) / (2 * e);
  const double yr = (yc - yd) / (2 * e);
  const double zs = (z(s + e, r) - z(s - e, r)) / (2 * e);
  const double zr = (z(s, r + e) - z(s, r - e)) / (2 * e);
  D = xs * yr - ys * xr;
  G1 = zs * yr - zr * ys + 0.5 * y * D;
  G2 = xs * zr - xr * zs - 0.5 * x * D;
}

}  // namespace

QuadResult zgraph_area(const PlanarField& phi, const Region& r,
                       const QuadConfig& cfg) {
  const double h = step_for(r, cfg);
  return integrate_region(
      [&](const RegionPoint& p) {
        double g1, g2;
        zgraph_gradient(phi, p.x, p.v, h, g1, g2);
        return std::hypot(g1, g2);
      },
      r, cfg);
}

QuadResult zgraph_energy(const PlanarField& phi, const Region& r,
                         const QuadConfig& cfg) {
  const double h = step_for(r, cfg);
  return integrate_region(
      [&](const RegionPoint& p) {
        double g1, g2;
        zgraph_gradient(phi, p.x, p.v, h, g1, g2);
        // Horizontal tangent slope m = g1 / -g2; density m^2/(2 sqrt(1+m^2))
        // times the area density |g|.
        return g1 * g1 / (2.0 * std::abs(g2));
      },
      r, cfg);
}

QuadResult zgraph_patch_area(const PatchHeight& z, const Region& r,
                             const QuadConfig& cfg) {
  return integrate_region(
      [&](const RegionPoint& p) {
        double G1, G2, D;
        patch_gradient(z, r, p.s, p.r, G1, G2, D);
        if (D == 0.0) return 0.0;
        return std::hypot(G1, G2) / std::abs(D);
      },
      r, cfg);
}

QuadResult zgraph_patch_energy(const PatchHeight& z, const Region& r,
                               const QuadConfig& cfg) {
  return integrate_region(
      [&](const RegionPoint& p) {
        double G1, G2, D;
        patch_gradient(z, r, p.s, p.r, G1, G2, D);
        if (D == 0.0) return 0.0;
        return G1 * G1 / (2.0 * std::abs(G2) * std::abs(D));
      },
      r, cfg);
}

}  // namespace heis
