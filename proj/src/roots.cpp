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

#include "heis/roots.hpp"

#include <cmath>

#include "heis/error.hpp"

namespace heis {

double solve_increasing(const std::function<double(double)>& g, double target,
                        double lo, double hi) {
  if (!(hi > lo)) hi = lo + 1.0;
  double width = hi - lo;
  int tries = 0;
  while (g(lo) > target) {
    lo -= width;
    width *= 2.0;
    if (++tries > 200 || !std::isfinite(lo)) {
      throw NumericError("no lower bracket for monotone solve");
    }
  }
  width = hi - lo;
  tries = 0;
  while (g(hi) < target) {
    hi += width;
    width *= 2.0;
    if (++tries > 200 || !std::isfinite(hi)) {
      throw NumericError("no upper bracket for monotone solve");
    }
  }
  // Invariant: g(lo) <= target <= g(hi).
  for (int it = 0; it < 2000; ++it) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    if (g(mid) < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return g(lo) >= target ? lo : hi;
}

}  // namespace heis
