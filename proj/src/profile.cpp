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

#include "heis/profile.hpp"

#include <algorithm>
#include <cmath>

#include "heis/error.hpp"

namespace heis {

struct Profile::Impl {
  bool sampled = false;
  // closed form
  Fn f;
  Fn df;
  std::optional<Interval> support;
  // samples
  std::vector<double> t;
  std::vector<double> v;
  std::vector<double> kinks;
};

namespace {

std::vector<double> sorted_unique(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

}  // namespace

Profile Profile::closed_form(Fn f, Fn df, std::vector<double> kinks,
                             std::optional<Interval> support) {
  auto impl = std::make_shared<Impl>();
  impl->f = std::move(f);
  impl->df = std::move(df);
  impl->kinks = sorted_unique(std::move(kinks));
  impl->support = support;
  return Profile(std::move(impl));
}

Profile Profile::constant(double c) {
  return closed_form([c](double) { return c; }, [](double) { return 0.0; });
}

Profile Profile::linear(double m, double b) {
  return closed_form([m, b](double t) { return m * t + b; },
                     [m](double) { return m; });
}

Profile Profile::broken_plane_alpha(double u) {
  if (!(u >= 0.0)) throw DomainError("broken plane needs u >= 0");
  const double h = 0.5 * u;
  return closed_form(
      [u, h](double t) {
        if (t < -h) return u;
        if (t > h) return -u;
        return -2.0 * t;
      },
      [h](double t) { return (t >= -h && t < h) ? -2.0 : 0.0; }, {-h, h});
}

Profile Profile::arctan(double a, double s) {
  if (s == 0.0) throw UsageError("arctan scale must be nonzero");
  return closed_form([a, s](double t) { return a * std::atan(t / s); },
                     [a, s](double t) {
                       const double r = t / s;
                       return a / (s * (1.0 + r * r));
                     });
}

Profile Profile::triangle_bump(double h, double w) {
  if (!(w > 0.0)) throw UsageError("triangle bump half-width must be > 0");
  return closed_form(
      [h, w](double t) { return h * std::max(0.0, 1.0 - std::abs(t) / w); },
      [h, w](double t) {
        if (t >= -w && t < 0.0) return h / w;
        if (t >= 0.0 && t < w) return -h / w;
        return 0.0;
      },
      {-w, 0.0, w}, Interval{-w, w});
}

Profile Profile::power(double p) {
  if (!(p > 0.0)) throw UsageError("power exponent must be > 0");
  return closed_form(
      [p](double t) { return std::copysign(std::pow(std::abs(t), p), t); },
      [p](double t) {
        if (t == 0.0) return p == 1.0 ? 1.0 : (p > 1.0 ? 0.0 : HUGE_VAL);
        return p * std::pow(std::abs(t), p - 1.0);
      });
}

Profile Profile::samples(std::vector<double> t, std::vector<double> v) {
  if (t.size() != v.size()) {
    throw UsageError("sample abscissae and values differ in length");
  }
  if (t.size() < 2) throw UsageError("need at least two samples");
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!std::isfinite(t[i]) || !std::isfinite(v[i])) {
      throw UsageError("samples must be finite");
    }
    if (i > 0 && !(t[i] > t[i - 1])) {
      throw UsageError("sample abscissae must be strictly increasing");
    }
  }
  auto impl = std::make_shared<Impl>();
  impl->sampled = true;
  impl->kinks = t;
  impl->t = std::move(t);
  impl->v = std::move(v);
  return Profile(std::move(impl));
}

double Profile::operator()(double t) const {
  const Impl& p = *impl_;
  if (!p.sampled) return p.f(t);
  if (t <= p.t.front()) return p.v.front();
  if (t >= p.t.back()) return p.v.back();
  const auto it = std::upper_bound(p.t.begin(), p.t.end(), t);
  const std::size_t k = static_cast<std::size_t>(it - p.t.begin()) - 1;
  const double s = (t - p.t[k]) / (p.t[k + 1] - p.t[k]);
  return p.v[k] + s * (p.v[k + 1] - p.v[k]);
}

double Profile::derivative(double t) const {
  const Impl& p = *impl_;
  if (!p.sampled) {
    if (p.df) return p.df(t);
    const double h = 1e-6 * std::max(1.0, std::abs(t));
    return (p.f(t + h) - p.f(t - h)) / (2.0 * h);
  }
  if (t < p.t.front() || t >= p.t.back()) return 0.0;
  const auto it = std::upper_bound(p.t.begin(), p.t.end(), t);
  const std::size_t k = static_cast<std::size_t>(it - p.t.begin()) - 1;
  return (p.v[k + 1] - p.v[k]) / (p.t[k + 1] - p.t[k]);
}

double Profile::slope(double t1, double t2) const {
  return ((*this)(t2) - (*this)(t1)) / (t2 - t1);
}

bool Profile::is_sampled() const { return impl_->sampled; }
const std::vector<double>& Profile::abscissae() const { return impl_->t; }
const std::vector<double>& Profile::values() const { return impl_->v; }
const std::vector<double>& Profile::kinks() const { return impl_->kinks; }

std::optional<Interval> Profile::support() const {
  const Impl& p = *impl_;
  if (!p.sampled) return p.support;
  // A sampled profile has compact support when it vanishes at both ends.
  if (p.v.front() != 0.0 || p.v.back() != 0.0) return std::nullopt;
  std::size_t first = 0;
  while (first < p.v.size() && p.v[first] == 0.0) ++first;
  if (first == p.v.size()) return Interval{p.t.front(), p.t.front()};
  std::size_t last = p.v.size() - 1;
  while (p.v[last] == 0.0) --last;
  return Interval{p.t[first - 1], p.t[last + 1]};
}

std::optional<Interval> Profile::sample_range() const {
  if (!impl_->sampled) return std::nullopt;
  return Interval{impl_->t.front(), impl_->t.back()};
}

std::vector<double> Profile::grid(double lo, double hi, int n) const {
  if (!(hi > lo)) throw UsageError("grid needs lo < hi");
  n = std::max(n, 2);
  std::vector<double> g;
  g.reserve(static_cast<std::size_t>(n) + impl_->kinks.size());
  for (int i = 0; i < n; ++i) {
    g.push_back(i == n - 1 ? hi : lo + (hi - lo) * i / (n - 1));
  }
  for (double k : impl_->kinks) {
    if (k > lo && k < hi) g.push_back(k);
  }
  return sorted_unique(std::move(g));
}

Profile Profile::sampled(double lo, double hi, int n) const {
  std::vector<double> t = grid(lo, hi, n);
  std::vector<double> v(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) v[i] = (*this)(t[i]);
  return samples(std::move(t), std::move(v));
}

double Profile::lipschitz_on(double lo, double hi, int n) const {
  const std::vector<double> t = grid(lo, hi, n);
  double lip = 0.0;
  double prev = (*this)(t[0]);
  for (std::size_t i = 1; i < t.size(); ++i) {
    const double cur = (*this)(t[i]);
    lip = std::max(lip, std::abs(cur - prev) / (t[i] - t[i - 1]));
    prev = cur;
  }
  return lip;
}

}  // namespace heis
