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

#include <cstddef>
#include <functional>
#include <vector>

namespace heis {

// Runs body(i) for i in [0, n) on a fixed pool of threads. Exceptions are
// rethrown after all workers join; the one from the lowest index wins.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

// Number of worker threads used by parallel_for (at least 1).
unsigned worker_count();

// Adaptive Gauss-Kronrod (7/15) on [a, b], split first at `breaks`.
double integrate_1d(const std::function<double(double)>& f, double a, double b,
                    const std::vector<double>& breaks = {},
                    double abs_tol = 1e-13, double rel_tol = 1e-12);

// A planar region given as the image of the unit square under a map
// (s, r) -> (x, v). Rectangles and regions between two graphs are special
// cases. An optional mask removes points (low order; use sparingly).
struct Region {
  std::function<void(double s, double r, double& x, double& v, double& jac)> map;
  std::function<bool(double x, double v)> mask;
  double x_lo = 0.0;
  double x_hi = 0.0;
  double v_lo = 0.0;
  double v_hi = 0.0;

  static Region rect(double x0, double x1, double v0, double v1);
  // {x in [x0, x1], lo(x) <= v <= hi(x)}.
  static Region between(double x0, double x1, std::function<double(double)> lo,
                        std::function<double(double)> hi, double v_min,
                        double v_max);
  // Union-free empty region.
  static Region empty();

  double diagonal() const;
  bool is_empty() const { return !map; }
};

struct RegionPoint {
  double s = 0.0;
  double r = 0.0;
  double x = 0.0;
  double v = 0.0;
};

struct QuadConfig {
  double rel_tol = 1e-5;
  double abs_tol = 1e-12;
  int base_cells = 8;
  int max_levels = 9;  // base_cells * 2^max_levels cells per side at most
  // Finite-difference step for gradients; <= 0 selects 1e-6 * diagonal.
  double grad_step = 0.0;
};

struct QuadResult {
  double value = 0.0;
  double previous = 0.0;
  int levels = 0;
  int cells_per_side = 0;
};

// Composite midpoint rule on dyadic refinements of the unit square with
// Richardson extrapolation. Throws NumericError with the last two estimates
// if the tolerance is not met within max_levels.
QuadResult integrate_region(const std::function<double(const RegionPoint&)>& f,
                            const Region& region, const QuadConfig& cfg);

}  // namespace heis
