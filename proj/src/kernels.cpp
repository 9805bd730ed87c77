#include "maxsurf/kernels.hpp"

#include <cmath>
#include <limits>

namespace maxsurf {

namespace {

SurfaceSample sample_point(const SurfaceView& view, cplx z, const QuadratureConfig& q, double eps) {
  SurfaceSample s;
  try {
    const SurfacePoint p = view.evaluate(z, q);
    s.X = p.X;
    s.error = p.error;
    s.ok = true;
    const WeierstrassData& piece = view.piece_at(z);
    const cplx f = piece.f.eval(z), g = piece.g.eval(z);
    const double k = 1.0 - std::norm(g);
    s.conformal = 0.5 * std::norm(f) * k * k;
    if (std::abs(k) >= eps) {
      s.N = gauss_map_of(g, eps);
      s.normal_ok = true;
    }
  } catch (const Error&) {
    s = SurfaceSample{};
  }
  return s;
}

struct IdentityPoint {
  double residual = 0.0;
  double metric = 0.0;
  bool ok = false;
};

IdentityPoint identity_point(const WeierstrassData& data, cplx z) {
  IdentityPoint out;
  try {
    const PhiTriple p = phi(data, z);
    out.residual = p.relative_identity_residual();
    out.metric = p.metric();
    out.ok = true;
  } catch (const Error&) {
  }
  return out;
}

IdentityStats reduce(const std::vector<IdentityPoint>& pts) {
  IdentityStats st;
  st.count = pts.size();
  st.min_metric = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (!pts[i].ok) {
      ++st.failures;
      continue;
    }
    if (pts[i].residual > st.max_relative_residual) {
      st.max_relative_residual = pts[i].residual;
      st.worst_index = i;
    }
    st.min_metric = std::min(st.min_metric, pts[i].metric);
  }
  return st;
}

}  // namespace

std::vector<SurfaceSample> sample_surface_serial(const SurfaceView& view, const std::vector<cplx>& points,
                                                 const QuadratureConfig& q, double degenerate_eps) {
  std::vector<SurfaceSample> out(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) out[i] = sample_point(view, points[i], q, degenerate_eps);
  return out;
}

std::vector<SurfaceSample> sample_surface_parallel(const SurfaceView& view, const std::vector<cplx>& points,
                                                   const QuadratureConfig& q, double degenerate_eps) {
  std::vector<SurfaceSample> out(points.size());
  const long n = static_cast<long>(points.size());
  // Quadrature cost varies a lot between points (distance from z0, poles).
#pragma omp parallel for schedule(dynamic, 4)
  for (long i = 0; i < n; ++i) out[i] = sample_point(view, points[i], q, degenerate_eps);
  return out;
}

IdentityStats identity_stats_serial(const WeierstrassData& data, const std::vector<cplx>& points) {
  std::vector<IdentityPoint> pts(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) pts[i] = identity_point(data, points[i]);
  return reduce(pts);
}

IdentityStats identity_stats_parallel(const WeierstrassData& data, const std::vector<cplx>& points) {
  std::vector<IdentityPoint> pts(points.size());
  const long n = static_cast<long>(points.size());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i) pts[i] = identity_point(data, points[i]);
  return reduce(pts);
}

}  // namespace maxsurf
