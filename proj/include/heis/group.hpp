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
#include <functional>
#include <vector>

namespace heis {

// A point (x, y, z) of the first Heisenberg group in exponential coordinates.
struct GroupPoint {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  bool operator==(const GroupPoint&) const = default;
};

// A point (x, 0, z) of the vertical plane V0.
struct V0Point {
  double x = 0.0;
  double z = 0.0;
};

GroupPoint multiply(const GroupPoint& p, const GroupPoint& q);
GroupPoint inverse(const GroupPoint& p);
GroupPoint operator*(const GroupPoint& p, const GroupPoint& q);

double koranyi_norm(const GroupPoint& p);
double koranyi_distance(const GroupPoint& p, const GroupPoint& q);

// Pi(x, y, z) = (x, 0, z - xy/2).
V0Point intrinsic_project(const GroupPoint& p);

// Psi_f(u) = u * Y^{f(u)}.
GroupPoint graph_point(const V0Point& u, double f_value);

// Height of q over the horizontal plane centred at p; zero iff [p, q] is a
// horizontal segment.
double horizontal_chord_offset(const GroupPoint& p, const GroupPoint& q);

// p * (t cos(theta), t sin(theta), 0): the horizontal line through p.
GroupPoint horizontal_step(const GroupPoint& p, double dx, double dy);

class HorizontalLine {
 public:
  static HorizontalLine with_slope(const GroupPoint& base, double slope);
  // Direction parallel to the Y axis.
  static HorizontalLine vertical(const GroupPoint& base);

  const GroupPoint& base() const { return base_; }
  bool is_vertical() const { return vertical_; }
  // Throws DomainError for vertical lines.
  double slope() const;

  // base * (t, t m, 0), or base * (0, t, 0) for vertical lines.
  GroupPoint at(double t) const;

 private:
  HorizontalLine(const GroupPoint& base, double slope, bool vertical)
      : base_(base), slope_(slope), vertical_(vertical) {}

  GroupPoint base_;
  double slope_ = 0.0;
  bool vertical_ = false;
};

// Coefficients (c0, c1, c2) of Pi(L) = {(x, 0, c0 + c1 x + c2 x^2)}.
// Throws DomainError("line projects to a point") for vertical lines.
std::array<double, 3> line_parabola(const HorizontalLine& line);

// Automorphisms and isometries acting on the group. Composition applies the
// listed maps left to right.
class Similarity {
 public:
  enum class Kind { kDilation, kRotation, kTranslation, kComposition };

  // s_{a,b}(x, y, z) = (a x, b y, a b z). Throws DomainError if a or b is 0.
  static Similarity dilation(double a, double b);
  static Similarity rotation(double theta);
  static Similarity left_translation(const GroupPoint& g);
  static Similarity compose(std::vector<Similarity> maps);

  Kind kind() const { return kind_; }
  GroupPoint apply(const GroupPoint& p) const;

 private:
  Kind kind_ = Kind::kDilation;
  double a_ = 1.0;
  double b_ = 1.0;
  double theta_ = 0.0;
  GroupPoint g_;
  std::vector<Similarity> parts_;
};

GroupPoint apply_similarity(const Similarity& s, const GroupPoint& p);

// Rotation about the z axis.
GroupPoint rotate(const GroupPoint& p, double theta);

}  // namespace heis
