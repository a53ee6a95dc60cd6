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

#include "heis/io.hpp"

#include <unistd.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <json.hpp>

#include "heis/error.hpp"

namespace heis {

using nlohmann::json;

bool ProfileSpec::operator==(const ProfileSpec& o) const {
  auto same_window = [](const std::optional<Interval>& a,
                        const std::optional<Interval>& b) {
    if (a.has_value() != b.has_value()) return false;
    return !a || (a->lo == b->lo && a->hi == b->hi);
  };
  return name == o.name && kind == o.kind && params == o.params && t == o.t &&
         v == o.v && same_window(window, o.window);
}

namespace {

void need(bool ok, const std::string& what) {
  if (!ok) throw UsageError("malformed profile spec: " + what);
}

}  // namespace

Profile ProfileSpec::to_profile() const {
  const std::size_t n = params.size();
  for (double p : params) need(std::isfinite(p), "non-finite parameter");
  if (kind == "constant") {
    need(n == 1, "constant takes one parameter");
    return Profile::constant(params[0]);
  }
  if (kind == "linear") {
    need(n == 1 || n == 2, "linear takes one or two parameters");
    return Profile::linear(params[0], n == 2 ? params[1] : 0.0);
  }
  if (kind == "id") {
    need(n == 0, "id takes no parameters");
    return Profile::linear(1.0);
  }
  if (kind == "broken-plane-alpha") {
    need(n == 1 && params[0] >= 0.0, "broken-plane-alpha takes u >= 0");
    return Profile::broken_plane_alpha(params[0]);
  }
  if (kind == "arctan") {
    need(n <= 2, "arctan takes at most two parameters");
    const double a = n >= 1 ? params[0] : -1.0;
    const double s = n >= 2 ? params[1] : 1.0;
    need(s != 0.0, "arctan scale must be nonzero");
    return Profile::arctan(a, s);
  }
  if (kind == "triangle-bump") {
    need(n == 2 && params[1] > 0.0, "triangle-bump takes h and w > 0");
    return Profile::triangle_bump(params[0], params[1]);
  }
  if (kind == "power") {
    need(n == 1 && params[0] > 0.0, "power takes p > 0");
    return Profile::power(params[0]);
  }
  if (kind == "samples") {
    need(t.size() >= 2 && t.size() == v.size(), "samples need >= 2 pairs");
    return Profile::samples(t, v);
  }
  throw UsageError("malformed profile spec: unknown kind '" + kind + "'");
}

namespace {

ProfileSpec from_json(const json& j) {
  need(j.is_object(), "JSON spec must be an object");
  ProfileSpec s;
  need(j.contains("kind") && j["kind"].is_string(), "missing kind");
  s.kind = j["kind"].get<std::string>();
  s.name = j.value("name", s.kind);
  if (j.contains("params")) {
    need(j["params"].is_array(), "params must be an array");
    for (const auto& p : j["params"]) {
      need(p.is_number(), "params must be numbers");
      s.params.push_back(p.get<double>());
    }
  }
  if (j.contains("samples")) {
    need(j["samples"].is_array(), "samples must be an array");
    for (const auto& p : j["samples"]) {
      need(p.is_array() && p.size() == 2 && p[0].is_number() &&
               p[1].is_number(),
           "samples must be [t, v] pairs");
      s.t.push_back(p[0].get<double>());
      s.v.push_back(p[1].get<double>());
    }
  }
  if (j.contains("window") && !j["window"].is_null()) {
    const auto& w = j["window"];
    need(w.is_array() && w.size() == 2 && w[0].is_number() && w[1].is_number(),
         "window must be [lo, hi]");
    s.window = Interval{w[0].get<double>(), w[1].get<double>()};
    need(s.window->lo < s.window->hi, "window must satisfy lo < hi");
  }
  return s;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\n\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\n\r");
  return s.substr(b, e - b + 1);
}

double parse_number(const std::string& text) {
  const std::string s = trim(text);
  need(!s.empty(), "empty parameter");
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    need(false, "bad number '" + s + "'");
  }
  need(pos == s.size(), "bad number '" + s + "'");
  return v;
}

}  // namespace

ProfileSpec parse_profile_spec(const std::string& text) {
  const std::string s = trim(text);
  need(!s.empty(), "empty spec");
  if (s.front() == '{') {
    json j;
    try {
      j = json::parse(s);
    } catch (const json::exception& e) {
      need(false, e.what());
    }
    ProfileSpec spec = from_json(j);
    spec.to_profile();
    return spec;
  }
  ProfileSpec spec;
  const auto open = s.find('(');
  if (open == std::string::npos) {
    spec.kind = s;
  } else {
    need(s.back() == ')', "missing ')'");
    spec.kind = trim(s.substr(0, open));
    const std::string body = s.substr(open + 1, s.size() - open - 2);
    if (!trim(body).empty()) {
      std::size_t start = 0;
      while (true) {
        const auto comma = body.find(',', start);
        spec.params.push_back(parse_number(body.substr(start, comma - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
    }
  }
  need(!spec.kind.empty(), "empty kind");
  need(spec.kind != "samples", "samples need the JSON form");
  spec.name = s;
  spec.to_profile();
  return spec;
}

std::string profile_spec_to_json(const ProfileSpec& spec) {
  json j;
  j["name"] = spec.name;
  j["kind"] = spec.kind;
  j["params"] = spec.params;
  json samples = json::array();
  for (std::size_t i = 0; i < spec.t.size(); ++i) {
    samples.push_back({spec.t[i], spec.v[i]});
  }
  j["samples"] = samples;
  if (spec.window) {
    j["window"] = {spec.window->lo, spec.window->hi};
  } else {
    j["window"] = nullptr;
  }
  return j.dump();
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string CsvTable::str() const {
  std::string out;
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i) out += ',';
    out += columns[i];
  }
  out += '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += format_double(row[i]);
    }
    out += '\n';
  }
  return out;
}

void atomic_write(const std::filesystem::path& path,
                  const std::string& content) {
  namespace fs = std::filesystem;
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw UsageError("cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw UsageError("cannot write " + tmp.string());
  }
  fs::rename(tmp, path);
}

namespace {

json point_json(const GroupPoint& p) { return {p.x, p.y, p.z}; }

}  // namespace

std::string crossing_report_json(const CrossingReport& r) {
  json j;
  j["surface"] = r.surface;
  j["seed"] = r.seed;
  j["lines"] = r.lines;
  j["attempts"] = r.attempts;
  j["crossing_lines"] = r.crossing_lines;
  j["degenerate"] = r.degenerate;
  j["violations"] = r.violations;
  j["total_crossings"] = r.total_crossings;
  json ws = json::array();
  for (const Witness& w : r.witnesses) {
    json e;
    e["index"] = w.index;
    e["line"] = {{"theta", w.line.theta}, {"v", w.line.v}, {"w", w.line.w}};
    e["t"] = w.t;
    json pts = json::array();
    for (const auto& p : w.points) pts.push_back(point_json(p));
    e["points"] = pts;
    e["validated"] = w.validated;
    e["max_chord_offset"] = w.max_chord_offset;
    ws.push_back(e);
  }
  j["witnesses"] = ws;
  return j.dump(2) + "\n";
}

std::string MeshObj::str() const {
  std::string out;
  for (const auto& h : header) out += "# " + h + "\n";
  for (const auto& p : vertices) {
    out += "v " + format_double(p.x) + " " + format_double(p.y) + " " +
           format_double(p.z) + "\n";
  }
  for (const auto& f : faces) {
    out += "f " + std::to_string(f[0] + 1) + " " + std::to_string(f[1] + 1) +
           " " + std::to_string(f[2] + 1) + "\n";
  }
  return out;
}

namespace {

std::map<std::array<int, 2>, int> edge_uses(
    const std::vector<std::array<int, 3>>& faces) {
  std::map<std::array<int, 2>, int> uses;
  for (const auto& f : faces) {
    for (int k = 0; k < 3; ++k) {
      int a = f[k], b = f[(k + 1) % 3];
      if (a > b) std::swap(a, b);
      ++uses[{a, b}];
    }
  }
  return uses;
}

}  // namespace

int MeshObj::max_edge_use() const {
  int m = 0;
  for (const auto& [e, n] : edge_uses(faces)) m = std::max(m, n);
  return m;
}

std::vector<std::array<int, 2>> MeshObj::boundary_edges() const {
  std::vector<std::array<int, 2>> out;
  for (const auto& [e, n] : edge_uses(faces)) {
    if (n == 1) out.push_back(e);
  }
  return out;
}

MeshObj export_obj(const RuledSurface& s, int points_per_ruling,
                   std::vector<std::string> header) {
  if (points_per_ruling < 1) throw UsageError("resolution must be positive");
  MeshObj mesh;
  mesh.header = std::move(header);
  std::map<std::array<std::uint64_t, 3>, int> index;
  auto vertex = [&](const GroupPoint& p) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y) || !std::isfinite(p.z)) {
      throw DomainError("surface is not realized on a bounded window");
    }
    // Adding 0.0 maps -0.0 to +0.0 so both weld.
    const std::array<std::uint64_t, 3> key = {
        std::bit_cast<std::uint64_t>(p.x + 0.0),
        std::bit_cast<std::uint64_t>(p.y + 0.0),
        std::bit_cast<std::uint64_t>(p.z + 0.0)};
    const auto [it, fresh] =
        index.emplace(key, static_cast<int>(mesh.vertices.size()));
    if (fresh) mesh.vertices.push_back(p);
    return it->second;
  };
  auto add_face = [&](int a, int b, int c) {
    if (a == b || b == c || a == c) return;
    const GroupPoint& p = mesh.vertices[a];
    const GroupPoint& q = mesh.vertices[b];
    const GroupPoint& r = mesh.vertices[c];
    const double ux = q.x - p.x, uy = q.y - p.y, uz = q.z - p.z;
    const double vx = r.x - p.x, vy = r.y - p.y, vz = r.z - p.z;
    const double cx = uy * vz - uz * vy;
    const double cy = uz * vx - ux * vz;
    const double cz = ux * vy - uy * vx;
    if (0.5 * std::sqrt(cx * cx + cy * cy + cz * cz) < 1e-14) return;
    mesh.faces.push_back({a, b, c});
  };
  const int n = points_per_ruling;
  for (const auto& fam : s.families) {
    std::vector<std::vector<int>> grid;
    for (const Segment& seg : fam) {
      std::vector<int> row;
      for (int j = 0; j <= n; ++j) {
        const double r = static_cast<double>(j) / n;
        row.push_back(vertex({seg.a.x + r * (seg.b.x - seg.a.x),
                              seg.a.y + r * (seg.b.y - seg.a.y),
                              seg.a.z + r * (seg.b.z - seg.a.z)}));
      }
      grid.push_back(std::move(row));
    }
    for (std::size_t k = 0; k + 1 < grid.size(); ++k) {
      for (int j = 0; j < n; ++j) {
        add_face(grid[k][j], grid[k + 1][j], grid[k + 1][j + 1]);
        add_face(grid[k][j], grid[k + 1][j + 1], grid[k][j + 1]);
      }
    }
  }
  return mesh;
}

}  // namespace heis
