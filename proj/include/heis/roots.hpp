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

namespace heis {

// Smallest t with g(t) >= target for nondecreasing g, by bisection down to
// adjacent doubles. [lo, hi] is a first guess; it is widened by doubling
// until it brackets the target. Throws NumericError if that fails.
double solve_increasing(const std::function<double(double)>& g, double target,
                        double lo, double hi);

}  // namespace heis
