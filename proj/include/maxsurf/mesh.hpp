#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "maxsurf/weierstrass.hpp"

namespace maxsurf {

struct MeshOptions {
  int n1 = 2, n2 = 2;
  double inset = 0.0;
  /// Vertices with conformal factor below this are masked.
  double degenerate_eps = 1e-10;
  QuadratureConfig q;
  bool parallel = true;
};

struct SurfaceMesh {
  int n1 = 0, n2 = 0;
  std::vector<cplx> params;
  std::vector<LVector> vertices;
  std::vector<LVector> normals;
  std::vector<bool> normal_defined;
  std::vector<double> conformal;
  std::vector<bool> masked;
  std::vector<std::array<int, 3>> triangles;  // 0-based

  int masked_count() const;
};

/// Samples the grid and triangulates it, two triangles per cell, skipping
/// every cell with a masked corner. Masked vertices are those where the
/// conformal factor is below `degenerate_eps` or evaluation failed (their
/// position is then 0).
SurfaceMesh build_mesh(const SurfaceView& view, const MeshOptions& options);

/// Wavefront OBJ: comment header, `v` lines at 17 significant digits,
/// 1-based `f` lines.
void write_obj(std::ostream& out, const SurfaceMesh& mesh, std::string_view version, std::string_view config_hash);

/// Per-vertex Gauss map, conformal factor and mask, keyed by vertex index.
nlohmann::ordered_json mesh_attributes(const SurfaceMesh& mesh);

/// 64-bit FNV-1a of the bytes, as 16 hex digits.
std::string fnv1a_hex(std::string_view bytes);

}  // namespace maxsurf
