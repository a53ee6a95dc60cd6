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

#include "heis/group.hpp"

#include <cmath>

#include "heis/error.hpp"

namespace heis {

GroupPoint multiply(const GroupPoint& p, const GroupPoint& q) {
  return {p.x + q.x, p.y + q.y, p.z + q.z + 0.5 * (p.x * q.y - p.y * q.x)};
}

GroupPoint inverse(const GroupPoint& p) { return {-p.x, -p.y, -p.z}; }

GroupPoint operator*(const GroupPoint& p, const GroupPoint& q) {
  return multiply(p, q);
}

double koranyi_norm(const GroupPoint& p) {
  const double r2 = p.x * p.x + p.y * p.y;
  return std::sqrt(std::sqrt(r2 * r2 + p.z * p.z));
}

double koranyi_distance(const GroupPoint& p, const GroupPoint& q) {
  return koranyi_norm(multiply(inverse(p), q));
}

V0Point intrinsic_project(const GroupPoint& p) {
  return {p.x, p.z - 0.5 * p.x * p.y};
}

GroupPoint graph_point(const V0Point& u, double f_value) {
  return multiply({u.x, 0.0, u.z}, {0.0, f_value, 0.0});
}

double horizontal_chord_offset(const GroupPoint& p, const GroupPoint& q) {
  return q.z - p.z - 0.5 * (p.x * (q.y - p.y) - p.y * (q.x - p.x));
}

GroupPoint horizontal_step(const GroupPoint& p, double dx, double dy) {
  return multiply(p, {dx, dy, 0.0});
}

HorizontalLine HorizontalLine::with_slope(const GroupPoint& base,
                                          double slope) {
  if (!std::isfinite(slope)) {
    throw DomainError("slope must be finite; use HorizontalLine::vertical");
  }
  return HorizontalLine(base, slope, false);
}

HorizontalLine HorizontalLine::vertical(const GroupPoint& base) {
  return HorizontalLine(base, 0.0, true);
}

double HorizontalLine::slope() const {
  if (vertical_) throw DomainError("line is parallel to the Y axis");
  return slope_;
}

GroupPoint HorizontalLine::at(double t) const {
  if (vertical_) return multiply(base_, {0.0, t, 0.0});
  return multiply(base_, {t, t * slope_, 0.0});
}

std::array<double, 3> line_parabola(const HorizontalLine& line) {
  if (line.is_vertical()) throw DomainError("line projects to a point");
  const GroupPoint& p = line.base();
  const double m = line.slope();
  // z(x) = z_p - x_p y_p / 2 - y_p (x - x_p) - (m/2)(x - x_p)^2, expanded.
  const double c2 = -0.5 * m;
  const double c1 = -p.y + m * p.x;
  const double c0 = p.z - 0.5 * p.x * p.y + p.y * p.x - 0.5 * m * p.x * p.x;
  return {c0, c1, c2};
}

Similarity Similarity::dilation(double a, double b) {
  if (a == 0.0 || b == 0.0) {
    throw DomainError("dilation parameters must be nonzero");
  }
  Similarity s;
  s.kind_ = Kind::kDilation;
  s.a_ = a;
  s.b_ = b;
  return s;
}

Similarity Similarity::rotation(double theta) {
  Similarity s;
  s.kind_ = Kind::kRotation;
  s.theta_ = theta;
  return s;
}

Similarity Similarity::left_translation(const GroupPoint& g) {
  Similarity s;
  s.kind_ = Kind::kTranslation;
  s.g_ = g;
  return s;
}

Similarity Similarity::compose(std::vector<Similarity> maps) {
  Similarity s;
  s.kind_ = Kind::kComposition;
  s.parts_ = std::move(maps);
  return s;
}

GroupPoint rotate(const GroupPoint& p, double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return {c * p.x - s * p.y, s * p.x + c * p.y, p.z};
}

GroupPoint Similarity::apply(const GroupPoint& p) const {
  switch (kind_) {
    case Kind::kDilation:
      return {a_ * p.x, b_ * p.y, a_ * b_ * p.z};
    case Kind::kRotation:
      return rotate(p, theta_);
    case Kind::kTranslation:
      return multiply(g_, p);
    case Kind::kComposition: {
      GroupPoint q = p;
      for (const Similarity& part : parts_) q = part.apply(q);
      return q;
    }
  }
  return p;
}

GroupPoint apply_similarity(const Similarity& s, const GroupPoint& p) {
  return s.apply(p);
}

}  // namespace heis
