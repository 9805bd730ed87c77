#include "maxsurf/mesh.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <ostream>

#include "maxsurf/kernels.hpp"

namespace maxsurf {

namespace {

std::string g17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

int SurfaceMesh::masked_count() const { return static_cast<int>(std::count(masked.begin(), masked.end(), true)); }

SurfaceMesh build_mesh(const SurfaceView& view, const MeshOptions& options) {
  if (options.n1 < 2 || options.n2 < 2) throw Error("mesh: grid must be at least 2 x 2");
  SurfaceMesh m;
  m.n1 = options.n1;
  m.n2 = options.n2;
  m.params = view.domain().grid(options.n1, options.n2, options.inset, true);
  const auto samples = options.parallel ? sample_surface_parallel(view, m.params, options.q)
                                        : sample_surface_serial(view, m.params, options.q);
  const std::size_t n = samples.size();
  m.vertices.resize(n);
  m.normals.resize(n);
  m.normal_defined.resize(n);
  m.conformal.resize(n);
  m.masked.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& s = samples[i];
    m.vertices[i] = s.ok ? s.X : LVector{};
    m.normals[i] = s.N;
    m.normal_defined[i] = s.normal_ok;
    m.conformal[i] = s.conformal;
    m.masked[i] = !s.ok || !(s.conformal >= options.degenerate_eps);
  }
  auto idx = [&m](int i, int j) { return i * m.n2 + j; };
  for (int i = 0; i + 1 < m.n1; ++i) {
    for (int j = 0; j + 1 < m.n2; ++j) {
      const int a = idx(i, j), b = idx(i + 1, j), c = idx(i + 1, j + 1), d = idx(i, j + 1);
      if (m.masked[a] || m.masked[b] || m.masked[c] || m.masked[d]) continue;
      m.triangles.push_back({a, b, c});
      m.triangles.push_back({a, c, d});
    }
  }
  return m;
}

void write_obj(std::ostream& out, const SurfaceMesh& mesh, std::string_view version, std::string_view config_hash) {
  out << "# maxsurf " << version << "\n";
  out << "# config " << config_hash << "\n";
  out << "# grid " << mesh.n1 << " x " << mesh.n2 << "\n";
  out << "# vertices " << mesh.vertices.size() << " triangles " << mesh.triangles.size() << " masked "
      << mesh.masked_count() << "\n";
  for (const auto& v : mesh.vertices) out << "v " << g17(v.x1) << " " << g17(v.x2) << " " << g17(v.x3) << "\n";
  for (const auto& t : mesh.triangles) out << "f " << t[0] + 1 << " " << t[1] + 1 << " " << t[2] + 1 << "\n";
}

nlohmann::ordered_json mesh_attributes(const SurfaceMesh& mesh) {
  nlohmann::ordered_json j;
  j["schema"] = "maxsurf.mesh-attributes/1";
  j["grid"] = {mesh.n1, mesh.n2};
  nlohmann::ordered_json verts = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < mesh.vertices.size(); ++i) {
    nlohmann::ordered_json v;
    v["index"] = i + 1;
    v["param"] = {mesh.params[i].real(), mesh.params[i].imag()};
    if (mesh.normal_defined[i])
      v["N"] = {mesh.normals[i].x1, mesh.normals[i].x2, mesh.normals[i].x3};
    else
      v["N"] = nullptr;
    v["conformal_factor"] = mesh.conformal[i];
    v["masked"] = static_cast<bool>(mesh.masked[i]);
    verts.push_back(v);
  }
  j["vertices"] = verts;
  return j;
}

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (const unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace maxsurf
