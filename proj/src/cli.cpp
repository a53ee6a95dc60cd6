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

#include "heis/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "heis/error.hpp"
#include "heis/families.hpp"
#include "heis/graphs.hpp"
#include "heis/io.hpp"
#include "heis/lines.hpp"
#include "heis/strips.hpp"
#include "heis/variation.hpp"

namespace heis {

namespace {

namespace fs = std::filesystem;

struct Call {
  std::string name;
  std::vector<double> args;
};

// "name(a, b, ...)" or "name".
Call parse_call(const std::string& text) {
  Call c;
  const auto open = text.find('(');
  if (open == std::string::npos) {
    c.name = text;
    return c;
  }
  if (text.back() != ')') throw UsageError("missing ')' in '" + text + "'");
  c.name = text.substr(0, open);
  std::stringstream body(text.substr(open + 1, text.size() - open - 2));
  std::string item;
  while (std::getline(body, item, ',')) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &pos);
    } catch (const std::exception&) {
      throw UsageError("bad number '" + item + "' in '" + text + "'");
    }
    c.args.push_back(v);
  }
  return c;
}

Interval pair_of(const std::vector<double>& v, const char* what) {
  if (v.size() != 2 || !(v[0] < v[1])) {
    throw UsageError(std::string(what) + " must be lo,hi with lo < hi");
  }
  return {v[0], v[1]};
}

Profile profile_of(const std::string& spec) {
  return parse_profile_spec(spec).to_profile();
}

ScalarField field_of(const std::string& text) {
  if (text.rfind("strip:", 0) == 0) {
    return alpha_strip_field(profile_of(text.substr(6)));
  }
  const Call c = parse_call(text);
  if (c.name == "broken-plane" && c.args.size() == 1) {
    return BrokenPlane(c.args[0]).field();
  }
  if (c.name == "linear" && c.args.size() == 1) {
    const double m = c.args[0];
    return ScalarField::closed([m](double x, double) { return m * x; });
  }
  if (c.name == "zero" && c.args.empty()) {
    return ScalarField::closed([](double, double) { return 0.0; });
  }
  throw UsageError("unknown field '" + text + "'");
}

Region region_of(const std::string& text) {
  const Call c = parse_call(text);
  if (c.name == "wedge" && c.args.size() == 1 && c.args[0] > 0.0) {
    const double u = c.args[0];
    return Region::between(
        -1.0, 1.0, [u](double x) { return -0.5 * u * x * x; },
        [u](double x) { return 0.5 * u * x * x; }, -0.5 * u, 0.5 * u);
  }
  if (c.name == "rect" && c.args.size() == 4 && c.args[0] < c.args[1] &&
      c.args[2] < c.args[3]) {
    return Region::rect(c.args[0], c.args[1], c.args[2], c.args[3]);
  }
  throw UsageError("unknown region '" + text + "'");
}

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += v[i];
  }
  return s;
}

struct Context {
  fs::path out_dir;
  std::ostream& out;
  void write(const std::string& name, const std::string& content) const {
    atomic_write(out_dir / name, content);
  }
};

int cmd_check(const Context& ctx, const std::string& spec,
              const std::vector<double>& window, bool minimal) {
  const Profile alpha = profile_of(spec);
  const Interval w = pair_of(window, "window");
  const StripVerdict v =
      minimal ? is_area_minimizing(alpha, w) : is_graphical_strip(alpha, w);
  CsvTable t{{"ok", "w1", "w2", "slope"}, {{v.ok ? 1.0 : 0.0, v.w1, v.w2, v.slope}}};
  ctx.write(minimal ? "check_minimal.csv" : "check_strip.csv", t.str());
  const char* what = minimal ? "area-minimizing" : "a graphical strip";
  if (v.ok) {
    ctx.out << spec << " is " << what << " (min pairwise slope "
            << format_double(v.slope) << ")\n";
    return kExitOk;
  }
  ctx.out << spec << " is not " << what << ": " << v.reason
          << "; witness slope " << format_double(v.slope) << " at ("
          << format_double(v.w1) << ", " << format_double(v.w2) << ")\n";
  return kExitVerdictFalse;
}

int cmd_area_energy(const Context& ctx, const std::string& field,
                    const std::string& region, double rel_tol, bool energy) {
  const ScalarField f = field_of(field);
  const Region r = region_of(region);
  QuadConfig cfg;
  cfg.rel_tol = rel_tol;
  const QuadResult q = energy ? dirichlet_energy(f, r, cfg) : graph_area(f, r, cfg);
  CsvTable t{{"value", "previous", "levels", "cells_per_side"},
             {{q.value, q.previous, static_cast<double>(q.levels),
               static_cast<double>(q.cells_per_side)}}};
  ctx.write(energy ? "energy.csv" : "area.csv", t.str());
  ctx.out << (energy ? "energy" : "area") << " = " << format_double(q.value)
          << "\n";
  return kExitOk;
}

int cmd_second_variation(const Context& ctx, const std::string& alpha_spec,
                         const std::string& tau_spec,
                         const std::vector<double>& lambdas) {
  const Profile alpha = profile_of(alpha_spec);
  const Profile tau = profile_of(tau_spec);
  const SecondVariationReport r = second_variation_experiment(
      alpha, tau, lambdas.empty() ? default_lambda_grid() : lambdas);
  CsvTable t{{"lambda", "area", "delta_area", "lambda2_ii"}, {}};
  for (std::size_t i = 0; i < r.lambdas.size(); ++i) {
    t.rows.push_back({r.lambdas[i], r.areas[i], r.delta_areas[i],
                      r.lambdas[i] * r.lambdas[i] * r.ii});
  }
  ctx.write("second_variation.csv", t.str());
  CsvTable s{{"base_area", "fitted", "ii", "residual_norm", "residual_slope",
              "max_odd_part", "w1", "w2"},
             {{r.base_area, r.fitted, r.ii, r.residual_norm, r.residual_slope,
               r.max_odd_part, r.w1, r.w2}}};
  ctx.write("second_variation_summary.csv", s.str());
  ctx.out << "fitted c = " << format_double(r.fitted)
          << ", II = " << format_double(r.ii) << "\n";
  return kExitOk;
}

int cmd_monotonicity(const Context& ctx, const std::string& sigma,
                     const std::string& alpha, double bp_u,
                     const std::string& rho, const std::vector<double>& window,
                     std::size_t n, std::uint64_t seed) {
  const Interval w = pair_of(window, "window");
  const int given = !sigma.empty() + !alpha.empty() + !std::isnan(bp_u) +
                    !rho.empty();
  if (given != 1) {
    throw UsageError("give exactly one of --sigma, --alpha, --broken-plane, --rho");
  }
  CrossingSurface s;
  if (!sigma.empty()) {
    s = sigma_crossing_surface(profile_of(sigma), w.lo, w.hi);
  } else if (!alpha.empty()) {
    s = alpha_crossing_surface(profile_of(alpha), w.lo, w.hi);
  } else if (!rho.empty()) {
    s = sigma_rho_crossing_surface(profile_of(rho), w.lo, w.hi);
  } else {
    s = broken_plane_crossing_surface(bp_u, w.lo, w.hi);
  }
  const CrossingReport r = monotonicity_check(s, bounding_ball(s), n, seed);
  ctx.write("monotonicity.json", crossing_report_json(r));
  ctx.out << s.name << ": " << r.violations << " violations in " << r.lines
          << " lines\n";
  return r.violations == 0 ? kExitOk : kExitVerdictFalse;
}

int cmd_scaling_limit(const Context& ctx, const std::string& plus,
                      const std::string& minus, double z_max,
                      const std::vector<double>& ts) {
  const Profile sp = profile_of(plus);
  const Profile sm = minus.empty() ? sp : profile_of(minus);
  const RuledEntireGraph g(sp, sm, {-z_max, z_max});
  const ScalingLimitReport r =
      scaling_limit(g, ts.empty() ? std::vector<double>{1, 2, 4, 8, 16} : ts);
  CsvTable t{{"t", "max_error"}, {}};
  for (std::size_t i = 0; i < r.t_grid.size(); ++i) {
    t.rows.push_back({r.t_grid[i], r.max_error[i]});
  }
  ctx.write("scaling_limit.csv", t.str());
  CsvTable s{{"m_inf", "m_minus_inf", "u", "theta"},
             {{r.m_inf, r.m_minus_inf, r.u, r.theta}}};
  ctx.write("scaling_limit_summary.csv", s.str());
  ctx.out << "u = " << format_double(r.u)
          << ", theta = " << format_double(r.theta) << "\n";
  return kExitOk;
}

int cmd_sigma_rho(const Context& ctx, const std::string& rho_spec,
                  const std::vector<double>& interval,
                  const std::vector<double>& pair, std::uint64_t samples,
                  std::uint64_t seed) {
  const Profile rho = profile_of(rho_spec);
  const Interval iv = pair_of(interval, "interval");
  double z1 = iv.lo, z2 = iv.hi;
  if (!pair.empty()) {
    if (pair.size() != 2) throw UsageError("pair must be z1,z2");
    z1 = pair[0];
    z2 = pair[1];
  }
  const double closed = sigma_rho_area(rho, iv.lo, iv.hi);
  const double quad = sigma_rho_area_quadrature(rho, iv.lo, iv.hi);
  const ChordObstruction c = chord_obstruction_check(rho, z1, z2, samples, seed);
  CsvTable t{{"a", "b", "area_closed_form", "area_quadrature", "z1", "z2",
              "pairs", "no_chord", "min_abs_offset", "max_formula_deviation",
              "endpoint_offset"},
             {{iv.lo, iv.hi, closed, quad, z1, z2, static_cast<double>(c.pairs),
               c.no_chord ? 1.0 : 0.0, c.min_abs_offset,
               c.max_formula_deviation, c.endpoint_offset}}};
  ctx.write("sigma_rho.csv", t.str());
  ctx.out << "area = " << format_double(closed) << "; "
          << (c.no_chord ? "no horizontal chord found" : "horizontal chord found")
          << " in " << c.pairs << " pairs\n";
  return c.no_chord ? kExitOk : kExitVerdictFalse;
}

int cmd_competitor(const Context& ctx, double u,
                   const std::vector<double>& window, double rel_tol) {
  const Interval w =
      window.empty() ? default_competitor_window(u) : pair_of(window, "window");
  QuadConfig cfg;
  cfg.rel_tol = rel_tol;
  const CompetitorComparison c = competitor_compare(u, w, cfg);
  const double a = competitor_a(u);
  const double b = competitor_b(u);
  CsvTable t{{"u", "z_lo", "z_hi", "a", "b", "area_minimal", "area_harmonic",
              "area_wu", "energy_minimal", "energy_harmonic", "energy_wu"},
             {{u, w.lo, w.hi, a, b, c.area_minimal, c.area_harmonic, c.area_wu,
               c.energy_minimal, c.energy_harmonic, c.energy_wu}}};
  ctx.write("competitor.csv", t.str());
  const bool smaller = c.area_minimal < c.area_wu;
  ctx.out << "area(minimal) = " << format_double(c.area_minimal)
          << (smaller ? " < " : " >= ") << "area(W_u) = "
          << format_double(c.area_wu) << " (margin "
          << format_double(c.area_wu - c.area_minimal) << ")\n";
  return smaller ? kExitOk : kExitVerdictFalse;
}

struct ExportArgs {
  std::string surface;
  std::string sigma, alpha, tau, rho;
  double u = 1.0;
  std::vector<double> window;
  int res = 100;
  int xres = 0;
};

int cmd_export_obj(const Context& ctx, const ExportArgs& a,
                   const std::vector<std::string>& argv) {
  if (a.res < 1) throw UsageError("res must be positive");
  const int rulings = a.res + 1;
  const int xres = a.xres > 0 ? a.xres : a.res;
  const Interval w = a.window.empty() ? Interval{-2.0, 2.0}
                                      : pair_of(a.window, "window");
  RuledSurface s;
  if (a.surface == "strip") {
    s = strip_surface(profile_of(a.sigma), w, rulings);
  } else if (a.surface == "alpha-strip" || a.surface == "broken-plane") {
    const Profile alpha = a.surface == "broken-plane"
                              ? Profile::broken_plane_alpha(a.u)
                              : profile_of(a.alpha);
    s = alpha_strip_surface(alpha, realize_window(alpha, w), rulings);
  } else if (a.surface == "sigma-rho") {
    s = sigma_rho_surface(profile_of(a.rho), w, rulings);
  } else if (a.surface == "competitor-minimal" ||
             a.surface == "competitor-harmonic") {
    const auto kind = a.surface == "competitor-minimal"
                          ? CompetitorKind::kMinimal
                          : CompetitorKind::kHarmonic;
    s = build_competitor(kind, a.u, a.res, a.window.empty() ? 0.0 : w.hi).full;
  } else if (a.surface == "deformation") {
    const Profile alpha = profile_of(a.alpha);
    s = build_half_deformation(alpha, profile_of(a.tau),
                               realize_window(alpha, w), rulings);
  } else {
    throw UsageError("unknown surface '" + a.surface + "'");
  }
  const MeshObj mesh = export_obj(
      s, xres,
      {"heis " + join(std::vector<std::string>(argv.begin() + 1, argv.end())),
       "surface " + s.name + ", rulings per family " + std::to_string(rulings) +
           ", points per ruling " + std::to_string(xres + 1)});
  const std::string name = a.surface + ".obj";
  ctx.write(name, mesh.str());
  ctx.out << "wrote " << name << ": " << mesh.vertices.size() << " vertices, "
          << mesh.faces.size() << " triangles\n";
  return kExitOk;
}

int cmd_calibrate(const Context& ctx, const std::vector<double>& radii,
                  std::uint64_t n, std::uint64_t seed) {
  if (radii.empty()) throw UsageError("need at least one radius");
  CsvTable t{{"radius", "measure", "std_error", "measure_over_r3"}, {}};
  for (std::size_t i = 0; i < radii.size(); ++i) {
    const double r = radii[i];
    if (!(r > 0.0)) throw UsageError("radii must be positive");
    // One stream per radius.
    const MeasureEstimate m =
        line_measure({{0, 0, 0}, r}, n, stream_seed(seed, i));
    t.rows.push_back({r, m.value, m.std_error, m.value / (r * r * r)});
  }
  ctx.write("calibrate_lines.csv", t.str());
  const auto& first = t.rows.front();
  for (const auto& row : t.rows) {
    ctx.out << "r = " << format_double(row[0]) << ": measure ratio to r = "
            << format_double(first[0]) << " is "
            << format_double(row[1] / first[1]) << "\n";
  }
  return kExitOk;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"Graphical strips in the Heisenberg group"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string out_dir;
  app.add_option("--out-dir", out_dir, "Output directory");

  std::string profile;
  std::vector<double> window;
  auto add_check = [&](const char* name, const char* help) {
    CLI::App* c = app.add_subcommand(name, help);
    c->add_option("--profile", profile, "Profile alpha")->required();
    c->add_option("--window", window, "z window lo,hi")->delimiter(',');
    return c;
  };
  CLI::App* check_strip = add_check("check-strip", "Graphical strip test");
  CLI::App* check_min = add_check("check-minimal", "Area-minimality test");

  std::string field, region = "wedge(1)";
  double rel_tol = 1e-5;
  auto add_quad = [&](const char* name, const char* help) {
    CLI::App* c = app.add_subcommand(name, help);
    c->add_option("--field", field, "broken-plane(u), linear(m), zero, strip:SPEC")
        ->required();
    c->add_option("--region", region, "wedge(u) or rect(x0,x1,z0,z1)");
    c->add_option("--rel-tol", rel_tol, "Quadrature tolerance");
    return c;
  };
  CLI::App* area = add_quad("area", "Area of an intrinsic graph");
  CLI::App* energy = add_quad("energy", "Dirichlet energy of an intrinsic graph");

  std::string alpha, tau;
  std::vector<double> lambdas;
  CLI::App* sv = app.add_subcommand("second-variation", "Deformation experiment");
  sv->add_option("--alpha", alpha)->required();
  sv->add_option("--tau", tau)->required();
  sv->add_option("--lambdas", lambdas)->delimiter(',');

  std::string sigma, rho;
  double bp_u = std::nan("");
  std::size_t n_lines = 100000;
  std::uint64_t seed = 1;
  CLI::App* mono = app.add_subcommand("monotonicity", "Line-crossing check");
  mono->add_option("--sigma", sigma);
  mono->add_option("--alpha", alpha);
  mono->add_option("--broken-plane", bp_u);
  mono->add_option("--rho", rho);
  mono->add_option("--window", window)->delimiter(',');
  mono->add_option("--n", n_lines);
  mono->add_option("--seed", seed);

  std::string sigma_minus;
  double z_max = 1000.0;
  std::vector<double> ts;
  CLI::App* sl = app.add_subcommand("scaling-limit", "Blow-down classification");
  sl->add_option("--sigma-plus", sigma)->required();
  sl->add_option("--sigma-minus", sigma_minus);
  sl->add_option("--z-max", z_max);
  sl->add_option("--t", ts)->delimiter(',');

  std::vector<double> interval{0.0, 1.0}, pair;
  std::uint64_t samples = 10000;
  CLI::App* sr = app.add_subcommand("sigma-rho", "Sigma_rho area and chords");
  sr->add_option("--rho", rho)->required();
  sr->add_option("--interval", interval)->delimiter(',');
  sr->add_option("--pair", pair)->delimiter(',');
  sr->add_option("--samples", samples);
  sr->add_option("--seed", seed);

  double u = 1.0;
  CLI::App* comp = app.add_subcommand("competitor", "Competitor comparison");
  comp->add_option("--u", u);
  comp->add_option("--window", window)->delimiter(',');
  comp->add_option("--rel-tol", rel_tol);

  ExportArgs ex;
  CLI::App* obj = app.add_subcommand("export-obj", "Wavefront mesh export");
  obj->add_option("--surface", ex.surface)->required();
  obj->add_option("--sigma", ex.sigma);
  obj->add_option("--alpha", ex.alpha);
  obj->add_option("--tau", ex.tau);
  obj->add_option("--rho", ex.rho);
  obj->add_option("--u", ex.u);
  obj->add_option("--window", ex.window)->delimiter(',');
  obj->add_option("--res", ex.res);
  obj->add_option("--xres", ex.xres);

  std::vector<double> radii{1.0, 2.0};
  std::uint64_t attempts = 1000000;
  CLI::App* cal = app.add_subcommand("calibrate-lines", "Line measure of balls");
  cal->add_option("--radii", radii)->delimiter(',');
  cal->add_option("--n", attempts);
  cal->add_option("--seed", seed);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (out_dir.empty()) {
    const char* env = std::getenv("HEIS_OUT_DIR");
    out_dir = env != nullptr && *env != '\0' ? env : ".";
  }
  const Context ctx{out_dir, out};
  const std::vector<double> default_window{-2.0, 2.0};
  try {
    if (*check_strip || *check_min) {
      return cmd_check(ctx, profile, window.empty() ? default_window : window,
                       static_cast<bool>(*check_min));
    }
    if (*area || *energy) {
      return cmd_area_energy(ctx, field, region, rel_tol,
                             static_cast<bool>(*energy));
    }
    if (*sv) return cmd_second_variation(ctx, alpha, tau, lambdas);
    if (*mono) {
      return cmd_monotonicity(ctx, sigma, alpha, bp_u, rho,
                              window.empty() ? std::vector<double>{-1.0, 1.0}
                                             : window,
                              n_lines, seed);
    }
    if (*sl) return cmd_scaling_limit(ctx, sigma, sigma_minus, z_max, ts);
    if (*sr) return cmd_sigma_rho(ctx, rho, interval, pair, samples, seed);
    if (*comp) return cmd_competitor(ctx, u, window, rel_tol);
    if (*obj) return cmd_export_obj(ctx, ex, args);
    if (*cal) return cmd_calibrate(ctx, radii, attempts, seed);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NumericError& e) {
    err << "numeric error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const fs::filesystem_error& e) {
    err << "i/o error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace heis
