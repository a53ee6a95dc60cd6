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

#include <string>
#include <vector>

#include "heis/group.hpp"

namespace heis {

struct Segment {
  GroupPoint a;
  GroupPoint b;
};

// A surface swept by ordered families of horizontal segments. Consecutive
// segments of one family bound a ruled quad strip; families are meshed
// independently.
struct RuledSurface {
  std::string name;
  std::vector<std::vector<Segment>> families;

  std::size_t ruling_count() const;
  // Largest |horizontal_chord_offset| over all stored segments.
  double max_chord_offset() const;
  RuledSurface transformed(const Similarity& s,
                           const std::string& new_name) const;
};

}  // namespace heis
