#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "maxsurf/weierstrass.hpp"

// Surface configuration files: one `key = value` per line, `#` comments,
// values optionally double-quoted. Numbers in lists are separated by spaces
// or commas.
//
//   f        expression               required
//   g        expression               required
//   domain   e.g. `annulus 0.2 1`     required
//   z0       re im                    required
//   X0       x1 x2 x3                 default 0 0 0
//   puncture re im [pole m]           repeatable
//   tol      quadrature tolerance     default 1e-10
//   plane    nx ny nz d               the plane <x, n> = d
//
// An extended surface adds the reflected piece:
//
//   boundary `real-axis` or `circle rho`
//   f_ext, g_ext, z0_ext, X0_ext

namespace maxsurf {

struct SurfaceConfig {
  std::string f, g;
  std::string domain;
  cplx z0;
  LVector X0;
  std::vector<Puncture> punctures;
  double tol = 1e-10;
  std::optional<LVector> plane_normal;
  double plane_offset = 0.0;

  std::optional<std::string> boundary;
  std::optional<std::string> f_ext, g_ext;
  std::optional<cplx> z0_ext;
  std::optional<LVector> X0_ext;

  bool is_extended() const { return boundary.has_value(); }
  std::optional<Plane> plane() const;
};

/// Throws ConfigError naming the offending key.
SurfaceConfig parse_config(std::string_view text);
/// Throws ConfigError (field "file") when the file cannot be read.
SurfaceConfig load_config(const std::string& path);
/// Canonical text: fixed key order, 17 significant digits.
std::string format_config(const SurfaceConfig& cfg);

/// The primary piece. Throws ConfigError naming the field that fails to
/// parse or validate.
WeierstrassData to_data(const SurfaceConfig& cfg);

struct ExtendedData {
  WeierstrassData primary;
  WeierstrassData reflected;
  ReflectionBoundary boundary = ReflectionBoundary::real_axis();
};

/// Both pieces of an extended config. Throws ConfigError when a reflected
/// key is missing.
ExtendedData to_extended(const SurfaceConfig& cfg);

/// The config describing an extension: `base` plus the reflected piece.
SurfaceConfig extended_config(const SurfaceConfig& base, const WeierstrassData& reflected,
                              const ReflectionBoundary& b);

/// The built-in catenoid: f = 1/z^2, g = z on e^-1.5 < |z| < 1, z0 = 1, X0 = 0.
std::string catenoid_config_text();

}  // namespace maxsurf
