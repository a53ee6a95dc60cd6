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

#include <cmath>
#include <random>
#include <vector>

#include "heis/profile.hpp"

namespace heis::testing {

// Piecewise linear profile on [lo, hi] with `pieces` random slopes in
// [smin, smax] and value 0 at lo.
inline Profile random_pl(std::mt19937_64& rng, double lo, double hi,
                         int pieces, double smin, double smax) {
  std::uniform_real_distribution<double> slope(smin, smax);
  std::vector<double> t{lo}, v{0.0};
  for (int k = 1; k <= pieces; ++k) {
    const double tk = lo + (hi - lo) * k / pieces;
    v.push_back(v.back() + slope(rng) * (tk - t.back()));
    t.push_back(tk);
  }
  return Profile::samples(t, v);
}

inline double min_consecutive_slope(const Profile& p) {
  const auto& t = p.abscissae();
  const auto& v = p.values();
  double m = INFINITY;
  for (std::size_t i = 1; i < t.size(); ++i) {
    m = std::min(m, (v[i] - v[i - 1]) / (t[i] - t[i - 1]));
  }
  return m;
}

// Ten increasing profiles on [0, 1] with rho(0) = 0 and rho(1) = 1.
inline std::vector<Profile> fixed_end_rhos() {
  constexpr double kPi = 3.141592653589793;
  std::vector<Profile> out{Profile::linear(1.0), Profile::power(2),
                           Profile::power(3), Profile::power(5)};
  out.push_back(Profile::closed_form(
      [](double z) { return std::sin(kPi * z / 2); },
      [](double z) { return kPi / 2 * std::cos(kPi * z / 2); }));
  out.push_back(Profile::closed_form(
      [](double z) { return std::expm1(z) / std::expm1(1.0); },
      [](double z) { return std::exp(z) / std::expm1(1.0); }));
  out.push_back(Profile::closed_form(
      [](double z) { return 0.5 * z * (1 + z); },
      [](double z) { return 0.5 + z; }));
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> inc(0.05, 1.0);
  for (int i = 0; i < 3; ++i) {
    std::vector<double> t{0.0}, v{0.0};
    for (int k = 1; k <= 7; ++k) {
      t.push_back(k / 7.0);
      v.push_back(v.back() + inc(rng));
    }
    for (double& x : v) x /= v.back();
    out.push_back(Profile::samples(t, v));
  }
  return out;
}

}  // namespace heis::testing
