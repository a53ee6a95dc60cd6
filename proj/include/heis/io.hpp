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

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "heis/lines.hpp"
#include "heis/profile.hpp"
#include "heis/surface.hpp"

namespace heis {

// A named profile: a registry kind with parameters, or a sample list.
// Registry kinds: constant(c), linear(m[, b]), id, broken-plane-alpha(u),
// arctan([a[, s]]), triangle-bump(h, w), power(p), samples.
struct ProfileSpec {
  std::string name;
  std::string kind;
  std::vector<double> params;
  std::vector<double> t;  // samples only
  std::vector<double> v;
  std::optional<Interval> window;

  bool operator==(const ProfileSpec& o) const;
  // Throws UsageError for unknown kinds or bad parameters.
  Profile to_profile() const;
};

// Accepts "kind(a,b)", a bare kind name, or a JSON object
// {"name", "kind", "params", "samples": [[t, v], ...], "window": [lo, hi]}.
ProfileSpec parse_profile_spec(const std::string& text);
std::string profile_spec_to_json(const ProfileSpec& spec);

// "%.17g".
std::string format_double(double v);

struct CsvTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::string str() const;
};

// Writes through a temporary file in the same directory and renames it.
void atomic_write(const std::filesystem::path& path, const std::string& content);

std::string crossing_report_json(const CrossingReport& r);

struct MeshObj {
  std::vector<std::string> header;  // comment lines without the leading '#'
  std::vector<GroupPoint> vertices;
  std::vector<std::array<int, 3>> faces;  // 0-based; written 1-based

  std::string str() const;
  // Largest number of faces sharing one undirected edge.
  int max_edge_use() const;
  // Edges used by exactly one face.
  std::vector<std::array<int, 2>> boundary_edges() const;
};

// Samples every segment at points_per_ruling + 1 points and joins
// consecutive segments of a family by two triangles per cell. Exact duplicate
// vertices are welded and zero-area triangles dropped. Throws DomainError for
// non-finite coordinates.
MeshObj export_obj(const RuledSurface& s, int points_per_ruling,
                   std::vector<std::string> header = {});

}  // namespace heis
