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
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace heis {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double length() const { return hi - lo; }
  bool contains(double t) const { return lo <= t && t <= hi; }
};

// A real function of one variable: either a closed form or a piecewise linear
// interpolant of samples. Sampled profiles are extended by their boundary
// values outside the sample range.
class Profile {
 public:
  using Fn = std::function<double(double)>;

  static Profile constant(double c);
  static Profile linear(double m, double b = 0.0);
  // u for t < -u/2, -2t on [-u/2, u/2], -u beyond.
  static Profile broken_plane_alpha(double u);
  // a * atan(t / s).
  static Profile arctan(double a, double s);
  // h * max(0, 1 - |t| / w).
  static Profile triangle_bump(double h, double w);
  // sign(t) |t|^p.
  static Profile power(double p);
  // Throws UsageError unless the abscissae are strictly increasing.
  static Profile samples(std::vector<double> t, std::vector<double> v);
  // Generic closed form. `kinks` lists points where the derivative jumps.
  static Profile closed_form(Fn f, Fn df, std::vector<double> kinks = {},
                             std::optional<Interval> support = std::nullopt);

  double operator()(double t) const;
  // Derivative; at kinks and sample nodes this is the right derivative.
  double derivative(double t) const;
  double slope(double t1, double t2) const;

  bool is_sampled() const;
  const std::vector<double>& abscissae() const;
  const std::vector<double>& values() const;
  // Kinks of a closed form, or interior sample nodes.
  const std::vector<double>& kinks() const;
  // Compact support, when known.
  std::optional<Interval> support() const;
  // Sample range of a sampled profile.
  std::optional<Interval> sample_range() const;

  // n uniform points on [lo, hi] merged with kinks inside the interval.
  std::vector<double> grid(double lo, double hi, int n) const;

  // Restriction to a sample list on grid(lo, hi, n).
  Profile sampled(double lo, double hi, int n) const;

  // Largest absolute difference quotient over consecutive grid points.
  double lipschitz_on(double lo, double hi, int n) const;

 private:
  struct Impl;
  explicit Profile(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

}  // namespace heis
