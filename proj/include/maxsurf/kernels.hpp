#pragma once

#include <cstddef>
#include <vector>

#include "maxsurf/weierstrass.hpp"

// Point-independent sampling kernels. Every kernel has a serial reference and
// an OpenMP variant; both compute each point with the same code and reduce in
// index order, so their outputs are bit-identical.

namespace maxsurf {

struct SurfaceSample {
  LVector X;
  LVector N;
  double conformal = 0.0;
  double error = 0.0;
  bool ok = false;         // X evaluated
  bool normal_ok = false;  // N defined (|g| away from 1)
};

std::vector<SurfaceSample> sample_surface_serial(const SurfaceView& view, const std::vector<cplx>& points,
                                                 const QuadratureConfig& q, double degenerate_eps = 1e-12);
std::vector<SurfaceSample> sample_surface_parallel(const SurfaceView& view, const std::vector<cplx>& points,
                                                   const QuadratureConfig& q, double degenerate_eps = 1e-12);

struct IdentityStats {
  std::size_t count = 0;
  std::size_t failures = 0;  // points where f or g could not be evaluated
  double max_relative_residual = 0.0;
  double min_metric = 0.0;
  std::size_t worst_index = 0;
};

/// Relative residual of phi1^2 + phi2^2 - phi3^2 = 0 and the minimum of
/// |phi1|^2 + |phi2|^2 - |phi3|^2 over the points.
IdentityStats identity_stats_serial(const WeierstrassData& data, const std::vector<cplx>& points);
IdentityStats identity_stats_parallel(const WeierstrassData& data, const std::vector<cplx>& points);

}  // namespace maxsurf
