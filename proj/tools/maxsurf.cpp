// maxsurf: evaluate, verify, extend and mesh maximal surfaces given by
// Weierstrass data. Exit codes: 0 pass, 1 check or hypothesis failure,
// 2 input error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "maxsurf/config.hpp"
#include "maxsurf/extension.hpp"
#include "maxsurf/mesh.hpp"
#include "maxsurf/verify.hpp"
#include "maxsurf/version.hpp"

using namespace maxsurf;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInputError = 2;

std::string g17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

struct Surface {
  SurfaceConfig cfg;
  WeierstrassData primary;
  std::optional<ExtendedData> ext;

  SurfaceView view() const {
    if (ext) return SurfaceView(ext->primary, ext->reflected, ext->boundary);
    return SurfaceView(primary);
  }
};

Surface load(const std::string& path) {
  Surface s;
  s.cfg = load_config(path);
  s.primary = to_data(s.cfg);
  if (s.cfg.is_extended()) s.ext = to_extended(s.cfg);
  return s;
}

QuadratureConfig quadrature(const SurfaceConfig& cfg, double tol) {
  QuadratureConfig q;
  q.abs_tol = tol > 0.0 ? tol : cfg.tol;
  return q;
}

int cmd_check(const std::string& path, double tol, const std::vector<int>& grid) {
  const Surface s = load(path);
  GridSpec gs;
  gs.q = quadrature(s.cfg, tol);
  if (!grid.empty()) {
    if (grid[0] < 2 || grid[1] < 2) throw ConfigError("--grid", "grid must be at least 2 x 2");
    gs.n1 = grid[0];
    gs.n2 = grid[1];
  }
  DiagnosticsReport rep;
  if (s.ext) {
    const std::optional<Plane> plane = s.cfg.plane();
    rep = full_diagnostics(s.ext->primary, s.ext->reflected, s.ext->boundary, plane ? &*plane : nullptr, gs);
  } else {
    rep = full_diagnostics(s.primary, gs);
  }
  std::cout << rep.to_json().dump(2) << "\n";
  return rep.pass() ? kPass : kFail;
}

int cmd_eval(const std::string& path, double tol, const std::vector<double>& at) {
  const Surface s = load(path);
  const SurfaceView view = s.view();
  const cplx z(at[0], at[1]);
  if (!view.in_closure(z)) {
    std::cerr << "error: (" << g17(at[0]) << ", " << g17(at[1]) << ") is outside the domain\n";
    return kFail;
  }
  const SurfacePoint p = view.evaluate(z, quadrature(s.cfg, tol));
  const WeierstrassData& piece = view.piece_at(z);
  const cplx f = piece.f.eval(z), g = piece.g.eval(z);
  const double k = 1.0 - std::norm(g);
  std::cout << "X = " << g17(p.X.x1) << " " << g17(p.X.x2) << " " << g17(p.X.x3) << "\n";
  try {
    const LVector N = gauss_map_of(g);
    std::cout << "N = " << g17(N.x1) << " " << g17(N.x2) << " " << g17(N.x3) << "\n";
  } catch (const DegenerateMetricError&) {
    std::cout << "N = undefined\n";
  }
  std::cout << "conformal_factor = " << g17(0.5 * std::norm(f) * k * k) << "\n";
  return kPass;
}

Plane plane_from(const std::vector<double>& flag, const SurfaceConfig& cfg) {
  try {
    if (!flag.empty()) return Plane({flag[0], flag[1], flag[2]}, flag[3]);
    if (const auto p = cfg.plane()) return *p;
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigError("plane", e.what());
  }
  throw ConfigError("plane", "missing: give --plane nx,ny,nz,d or a `plane` key");
}

int cmd_extend(const std::string& path, double tol, const std::vector<double>& plane_flag, const std::string& out) {
  Surface s = load(path);
  if (s.ext) throw ConfigError("boundary", "the config already describes an extended surface");
  const Plane plane = plane_from(plane_flag, s.cfg);
  ReflectionBoundary b = ReflectionBoundary::real_axis();
  try {
    b = s.primary.domain.default_boundary();
  } catch (const Error& e) {
    throw ConfigError("domain", e.what());
  }
  ExtendOptions opt;
  opt.q = quadrature(s.cfg, tol);

  nlohmann::ordered_json rep;
  rep["schema"] = "maxsurf.extension/1";
  ExtendedSurface ext;
  try {
    ext = extend_across(s.primary, plane, b, opt);
  } catch (const ContactError& e) {
    static const char* kinds[] = {"orthogonal-contact", "hypothesis-violation", "geometry-mismatch",
                                  "singular-reconstruction", "insufficient-samples"};
    rep["status"] = "rejected";
    rep["pass"] = false;
    rep["error"] = {{"kind", kinds[static_cast<int>(e.kind())]}, {"message", e.what()}};
    std::cout << rep.dump(2) << "\n";
    return kFail;
  }
  SurfaceConfig cfg = s.cfg;
  cfg.plane_normal = ext.contact.plane.normal();
  cfg.plane_offset = ext.contact.plane.offset();
  const std::string text = format_config(extended_config(cfg, ext.reflected, ext.boundary));

  rep["status"] = "extended";
  rep["pass"] = ext.matching.pass();
  rep["datum"] = ext.datum.label;
  rep["boundary"] = ext.boundary.describe();
  rep["contact"] = to_json(ext.contact);
  rep["matching"] = to_json(ext.matching);
  rep["warnings"] = ext.warnings;
  rep["f_ext"] = expr::format(ext.reflected.f);
  rep["g_ext"] = expr::format(ext.reflected.g);
  if (out.empty()) {
    rep["config"] = text;
  } else {
    std::ofstream f(out, std::ios::binary);
    if (!(f << text)) {
      std::cerr << "error: cannot write `" << out << "`\n";
      return kInputError;
    }
    rep["config_path"] = out;
  }
  std::cout << rep.dump(2) << "\n";
  return ext.matching.pass() ? kPass : kFail;
}

int cmd_mesh(const std::string& path, double tol, const std::vector<int>& grid, const std::string& out) {
  const Surface s = load(path);
  if (grid[0] < 2 || grid[1] < 2) throw ConfigError("--grid", "grid must be at least 2 x 2");
  MeshOptions opt;
  opt.n1 = grid[0];
  opt.n2 = grid[1];
  opt.q = quadrature(s.cfg, tol);
  const SurfaceView view = s.view();
  const SurfaceMesh mesh = build_mesh(view, opt);
  const std::string hash = fnv1a_hex(format_config(s.cfg));
  {
    std::ofstream f(out, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot write `" << out << "`\n";
      return kInputError;
    }
    write_obj(f, mesh, MAXSURF_VERSION, hash);
    if (!f) {
      std::cerr << "error: cannot write `" << out << "`\n";
      return kInputError;
    }
  }
  {
    const std::string side = out + ".attrs.json";
    std::ofstream f(side, std::ios::binary);
    if (!(f << mesh_attributes(mesh).dump(2) << "\n")) {
      std::cerr << "error: cannot write `" << side << "`\n";
      return kInputError;
    }
  }
  std::cout << "wrote " << out << ": " << mesh.vertices.size() << " vertices, " << mesh.triangles.size()
            << " triangles, " << mesh.masked_count() << " masked\n";
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"maxsurf: maximal surfaces in Lorentz-Minkowski 3-space from Weierstrass data"};
  app.set_version_flag("--version", MAXSURF_VERSION);
  app.require_subcommand(1);

  std::string config, out;
  double tol = 0.0;
  std::vector<int> grid;
  std::vector<double> at, plane;

  auto* check = app.add_subcommand("check", "Run the diagnostic suite; JSON report on stdout");
  check->add_option("config", config, "Surface config file")->required();
  check->add_option("--tol", tol, "Quadrature tolerance (overrides the config)");
  check->add_option("--grid", grid, "Sample grid N,M")->expected(2)->delimiter(',');

  auto* eval = app.add_subcommand("eval", "Print X, N and the conformal factor at one point");
  eval->add_option("config", config, "Surface config file")->required();
  eval->add_option("--at", at, "Parameter point u,v")->expected(2)->delimiter(',')->required();
  eval->add_option("--tol", tol, "Quadrature tolerance (overrides the config)");

  auto* ext = app.add_subcommand("extend", "Extend the surface across its boundary arc by reflection");
  ext->add_option("config", config, "Surface config file")->required();
  ext->add_option("--plane", plane, "Plane <x, n> = d as nx,ny,nz,d")->expected(4)->delimiter(',');
  ext->add_option("-o,--output", out, "Write the extended config here");
  ext->add_option("--tol", tol, "Quadrature tolerance (overrides the config)");

  auto* mesh = app.add_subcommand("mesh", "Write an OBJ mesh and a sidecar attribute file");
  mesh->add_option("config", config, "Surface config file")->required();
  mesh->add_option("--grid", grid, "Grid N,M")->expected(2)->delimiter(',')->required();
  mesh->add_option("-o,--output", out, "OBJ output path")->required();
  mesh->add_option("--tol", tol, "Quadrature tolerance (overrides the config)");

  auto* cat = app.add_subcommand("catenoid", "Print the built-in catenoid config");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*check) return cmd_check(config, tol, grid);
    if (*eval) return cmd_eval(config, tol, at);
    if (*ext) return cmd_extend(config, tol, plane, out);
    if (*mesh) return cmd_mesh(config, tol, grid, out);
    if (*cat) {
      std::cout << catenoid_config_text();
      return kPass;
    }
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kInputError;
}
