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

#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "heis/error.hpp"
#include "heis/io.hpp"
#include "heis/strips.hpp"

namespace heis {
namespace {

namespace fs = std::filesystem;

TEST(ProfileSpec, ParsesRegistryKinds) {
  const ProfileSpec bp = parse_profile_spec("broken-plane-alpha(1)");
  EXPECT_EQ(bp.kind, "broken-plane-alpha");
  EXPECT_EQ(bp.params, std::vector<double>{1.0});
  EXPECT_DOUBLE_EQ(bp.to_profile()(0.25), -0.5);

  const ProfileSpec id = parse_profile_spec("id");
  EXPECT_EQ(id.kind, "id");
  EXPECT_EQ(id.to_profile()(0.3), 0.3);

  const Profile tri = parse_profile_spec("triangle-bump(2, 0.5)").to_profile();
  EXPECT_DOUBLE_EQ(tri(0.25), 1.0);
  EXPECT_EQ(parse_profile_spec("linear(-1)").to_profile()(0.5), -0.5);
  EXPECT_EQ(parse_profile_spec("constant(3)").to_profile()(-7), 3.0);
  EXPECT_NEAR(parse_profile_spec("arctan").to_profile()(1e9),
              -3.141592653589793 / 2, 1e-8);
  EXPECT_EQ(parse_profile_spec("power(3)").to_profile()(-2), -8.0);
}

TEST(ProfileSpec, ParsesJsonSamples) {
  const ProfileSpec s = parse_profile_spec(
      R"({"name": "ramp", "kind": "samples",
          "samples": [[0, 0], [1, 2], [3, 2]], "window": [0, 3]})");
  EXPECT_EQ(s.name, "ramp");
  ASSERT_TRUE(s.window.has_value());
  EXPECT_EQ(s.window->hi, 3.0);
  const Profile p = s.to_profile();
  EXPECT_EQ(p(0.5), 1.0);
  EXPECT_EQ(p(2.0), 2.0);
}

TEST(ProfileSpec, JsonRoundTrip) {
  for (const char* text :
       {"broken-plane-alpha(0.5)", "triangle-bump(1,1)", "id", "arctan(-2,3)",
        "linear(-1,0.25)", "power(3)",
        R"({"name": "s", "kind": "samples", "samples": [[0, 0.1], [0.3, -1]],
            "window": [-1, 1]})"}) {
    const ProfileSpec a = parse_profile_spec(text);
    const ProfileSpec b = parse_profile_spec(profile_spec_to_json(a));
    EXPECT_EQ(a, b) << text;
    EXPECT_EQ(profile_spec_to_json(a), profile_spec_to_json(b)) << text;
  }
  // Doubles survive exactly.
  const ProfileSpec c = parse_profile_spec("linear(0.1)");
  EXPECT_EQ(parse_profile_spec(profile_spec_to_json(c)).params[0], 0.1);
}

TEST(ProfileSpec, RejectsMalformed) {
  for (const char* text :
       {"", "foo(1)", "linear(", "linear(1,2,3)", "triangle-bump(1)",
        "broken-plane-alpha(x)", "constant(1)x", "{\"kind\":",
        R"({"kind": "samples", "samples": [[0, 0], [0, 1]]})",
        R"({"kind": "samples", "samples": [[1, 0], [0, 1]]})",
        R"({"kind": "samples"})"}) {
    EXPECT_THROW(parse_profile_spec(text).to_profile(), UsageError) << text;
  }
}

TEST(Csv, Format) {
  EXPECT_EQ(format_double(0.1), "0.10000000000000001");
  EXPECT_EQ(std::strtod(format_double(1.0 / 3.0).c_str(), nullptr), 1.0 / 3.0);
  const CsvTable t{{"a", "b"}, {{1.0, -0.5}, {2.0, 0.25}}};
  EXPECT_EQ(t.str(), "a,b\n1,-0.5\n2,0.25\n");
}

TEST(AtomicWrite, WritesAndLeavesNoTemporaries) {
  const fs::path dir = fs::temp_directory_path() / "heis_atomic_test";
  fs::remove_all(dir);
  atomic_write(dir / "sub" / "x.txt", "hello\n");
  atomic_write(dir / "sub" / "x.txt", "again\n");
  std::ifstream in(dir / "sub" / "x.txt");
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(ss.str(), "again\n");
  int files = 0;
  for (const auto& e : fs::directory_iterator(dir / "sub")) {
    (void)e;
    ++files;
  }
  EXPECT_EQ(files, 1);
  fs::remove_all(dir);
}

TEST(CrossingReportJson, CarriesSeedAndWitnesses) {
  const CrossingSurface s = broken_plane_crossing_surface(1.0, -1, 1);
  const CrossingReport r = monotonicity_check(s, bounding_ball(s), 3000, 42);
  const nlohmann::json j = nlohmann::json::parse(crossing_report_json(r));
  EXPECT_EQ(j["seed"], 42);
  EXPECT_EQ(j["lines"], 3000);
  EXPECT_EQ(j["violations"], r.violations);
  ASSERT_EQ(j["witnesses"].size(), r.witnesses.size());
  if (!r.witnesses.empty()) {
    EXPECT_EQ(j["witnesses"][0]["line"]["w"].get<double>(),
              r.witnesses[0].line.w);
  }
}

TEST(Mesh, PlaneGridCounts) {
  const RuledSurface s = strip_surface(Profile::constant(0), {-1, 1}, 3);
  const MeshObj m = export_obj(s, 2);
  EXPECT_EQ(m.vertices.size(), 9u);
  EXPECT_EQ(m.faces.size(), 8u);
  EXPECT_EQ(m.max_edge_use(), 2);
  for (const auto& f : m.faces) {
    for (int i : f) {
      EXPECT_GE(i, 0);
      EXPECT_LT(i, 9);
    }
  }
}

double tri_area(const MeshObj& m, const std::array<int, 3>& f) {
  const GroupPoint& a = m.vertices[f[0]];
  const GroupPoint& b = m.vertices[f[1]];
  const GroupPoint& c = m.vertices[f[2]];
  const double u[3] = {b.x - a.x, b.y - a.y, b.z - a.z};
  const double v[3] = {c.x - a.x, c.y - a.y, c.z - a.z};
  return 0.5 * std::sqrt(std::pow(u[1] * v[2] - u[2] * v[1], 2) +
                         std::pow(u[2] * v[0] - u[0] * v[2], 2) +
                         std::pow(u[0] * v[1] - u[1] * v[0], 2));
}

TEST(Mesh, BrokenPlaneIsWatertight) {
  const Profile alpha = Profile::broken_plane_alpha(1.0);
  const RuledSurface s =
      alpha_strip_surface(alpha, realize_window(alpha, {-2, 2}), 101);
  const MeshObj m = export_obj(s, 100);
  EXPECT_EQ(m.max_edge_use(), 2);
  for (const auto& f : m.faces) EXPECT_GT(tri_area(m, f), 0.0);
  // Every edge used once lies on |x| = 1 or on the end rulings z = +-2.
  const auto boundary = m.boundary_edges();
  EXPECT_FALSE(boundary.empty());
  for (const auto& e : boundary) {
    const GroupPoint& p = m.vertices[e[0]];
    const GroupPoint& q = m.vertices[e[1]];
    const bool side = std::abs(std::abs(p.x) - 1) < 1e-12 &&
                      std::abs(std::abs(q.x) - 1) < 1e-12 && p.x == q.x;
    const bool end = std::abs(std::abs(p.z) - 2) < 1e-12 && p.z == q.z;
    EXPECT_TRUE(side || end);
  }
}

TEST(Mesh, ReexportIsByteIdentical) {
  const Profile alpha = Profile::broken_plane_alpha(1.0);
  const RuledSurface s =
      alpha_strip_surface(alpha, realize_window(alpha, {-2, 2}), 41);
  EXPECT_EQ(export_obj(s, 20, {"h"}).str(), export_obj(s, 20, {"h"}).str());
  const std::string text = export_obj(s, 20, {"heis test"}).str();
  EXPECT_EQ(text.rfind("# heis test\n", 0), 0u);
}

TEST(Mesh, RejectsNonFinite) {
  RuledSurface s;
  s.families = {{{{-1, 0, 0}, {1, 0, 0}}, {{-1, 0, INFINITY}, {1, 0, 1}}}};
  EXPECT_THROW(export_obj(s, 2), DomainError);
}

}  // namespace
}  // namespace heis
