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

#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "heis/group.hpp"
#include "heis/profile.hpp"

namespace heis {

// The horizontal line rot_theta({(t, v, w - v t / 2) : t in R}).
struct LineSample {
  double theta = 0.0;
  double v = 0.0;
  double w = 0.0;

  GroupPoint at(double t) const;
};

// Coordinates of the line through p with planar direction angle theta.
LineSample line_coordinates(const GroupPoint& p, double theta);

struct Ball {
  GroupPoint center;
  double radius = 1.0;
};

// Whether the line meets the closed Koranyi ball.
bool line_meets_ball(const LineSample& line, const Ball& ball);

// Mixes (seed, index) into the seed of an independent stream.
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index);

struct LineBatch {
  std::vector<LineSample> lines;
  std::uint64_t attempts = 0;
  double box_volume = 0.0;
};

// n i.i.d. lines from the density d(theta) dv dw restricted to lines meeting
// the ball, by rejection from a box in (theta, v, w). Line i depends only on
// (seed, i). Throws UsageError if n == 0.
LineBatch sample_lines(const Ball& ball, std::size_t n, std::uint64_t seed);

struct MeasureEstimate {
  double value = 0.0;
  double std_error = 0.0;
  std::uint64_t accepted = 0;
  std::uint64_t attempts = 0;
};

// Monte-Carlo measure of the set of lines meeting the ball.
MeasureEstimate line_measure(const Ball& ball, std::uint64_t attempts,
                             std::uint64_t seed);

struct Box3 {
  double x0 = -std::numeric_limits<double>::infinity();
  double x1 = std::numeric_limits<double>::infinity();
  double y0 = -std::numeric_limits<double>::infinity();
  double y1 = std::numeric_limits<double>::infinity();
  double z0 = -std::numeric_limits<double>::infinity();
  double z1 = std::numeric_limits<double>::infinity();
};

// A surface seen through a signed offset that changes sign exactly across
// it, restricted to a box.
struct CrossingSurface {
  std::string name;
  std::function<double(const GroupPoint&)> offset;
  Box3 box;
  // Point on the surface check used to validate witnesses.
  std::function<bool(const GroupPoint&)> on_surface;
};

struct CrossingOptions {
  int samples_per_line = 256;
  double root_tol = 1e-10;
  double merge_tol = 1e-8;
};

struct LineCrossings {
  std::vector<double> t;
  bool degenerate = false;
};

LineCrossings crossings(const CrossingSurface& s, const LineSample& line,
                        const CrossingOptions& opt = {});

struct Witness {
  std::uint64_t index = 0;
  LineSample line;
  std::vector<double> t;
  std::vector<GroupPoint> points;
  bool validated = false;
  double max_chord_offset = 0.0;
};

struct CrossingReport {
  std::string surface;
  std::uint64_t seed = 0;
  std::uint64_t lines = 0;
  std::uint64_t attempts = 0;
  std::uint64_t crossing_lines = 0;
  std::uint64_t degenerate = 0;
  std::uint64_t violations = 0;
  std::uint64_t total_crossings = 0;
  std::vector<Witness> witnesses;
};

// Samples lines meeting the ball and counts crossings with the surface in its
// box; a line with two or more crossings is a violation. At most
// max_witnesses are stored, lowest index first.
CrossingReport monotonicity_check(const CrossingSurface& s, const Ball& ball,
                                  std::size_t n, std::uint64_t seed,
                                  const CrossingOptions& opt = {},
                                  std::size_t max_witnesses = 16);

// The strip over K bounded by sigma, cut to z in z_window.
CrossingSurface sigma_crossing_surface(const Profile& sigma, double z0,
                                       double z1);
// BP_u cut to |x| <= 1 and z in [z0, z1].
CrossingSurface broken_plane_crossing_surface(double u, double z0, double z1);
// The strip S_alpha cut to the z window, offset through the graph function.
CrossingSurface alpha_crossing_surface(const Profile& alpha, double z0,
                                       double z1);

// Smallest ball about (0, 0, z-center) containing the surface's box part.
Ball bounding_ball(const CrossingSurface& s);

CrossingReport monotonicity_check(const Profile& sigma, double z0, double z1,
                                  std::size_t n, std::uint64_t seed);

struct PerimeterEstimate {
  double mean_e = 0.0;
  double se_e = 0.0;
  double mean_f = 0.0;
  double se_f = 0.0;
  std::uint64_t lines = 0;
};

// Mean crossing counts of both surfaces over one shared line sample.
PerimeterEstimate relative_perimeter(const CrossingSurface& e,
                                     const CrossingSurface& f,
                                     const Ball& ball, std::size_t n,
                                     std::uint64_t seed,
                                     const CrossingOptions& opt = {});

}  // namespace heis
