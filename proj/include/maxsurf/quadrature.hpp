#pragma once

#include <array>
#include <functional>

#include "maxsurf/domain.hpp"

namespace maxsurf {

struct QuadratureConfig {
  double abs_tol = 1e-10;
  int max_subdivisions = 4000;
  PathPolicy path = PathPolicy::Auto;
  /// Minimum distance kept between integration paths and punctures.
  double clearance = 1e-3;
};

using Vec3c = std::array<cplx, 3>;

struct PathIntegral {
  Vec3c value{};
  /// Sum over intervals of |Kronrod - Gauss|, max-norm over components.
  double error = 0.0;
  int intervals = 0;
};

/// Globally adaptive Gauss-Kronrod (7/15) integration of `integrand(z) dz`
/// along `path`. The worst interval is bisected until the summed error
/// estimate is below `abs_tol` (or below rounding level for the integral's
/// magnitude). Throws QuadratureError after `max_subdivisions` intervals.
PathIntegral integrate_path(const Path& path, const std::function<Vec3c(cplx)>& integrand, double abs_tol,
                            int max_subdivisions);

}  // namespace maxsurf
