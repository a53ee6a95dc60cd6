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

#include "heis/surface.hpp"

#include <algorithm>
#include <cmath>

namespace heis {

std::size_t RuledSurface::ruling_count() const {
  std::size_t n = 0;
  for (const auto& fam : families) n += fam.size();
  return n;
}

double RuledSurface::max_chord_offset() const {
  double m = 0.0;
  for (const auto& fam : families) {
    for (const Segment& s : fam) {
      m = std::max(m, std::abs(horizontal_chord_offset(s.a, s.b)));
    }
  }
  return m;
}

RuledSurface RuledSurface::transformed(const Similarity& s,
                                       const std::string& new_name) const {
  RuledSurface out;
  out.name = new_name;
  out.families.reserve(families.size());
  for (const auto& fam : families) {
    std::vector<Segment> mapped;
    mapped.reserve(fam.size());
    for (const Segment& seg : fam) {
      mapped.push_back({s.apply(seg.a), s.apply(seg.b)});
    }
    out.families.push_back(std::move(mapped));
  }
  return out;
}

}  // namespace heis
