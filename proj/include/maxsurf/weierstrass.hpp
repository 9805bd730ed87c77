#pragma once

#include <optional>
#include <string_view>

#include "maxsurf/domain.hpp"
#include "maxsurf/expr.hpp"
#include "maxsurf/minkowski.hpp"
#include "maxsurf/quadrature.hpp"

namespace maxsurf {

/// Complete description of a maximal surface patch:
///   X(z) = X0 + Re integral_{z0}^{z} (phi1, phi2, phi3) dw
/// with phi1 = f (1 + g^2) / 2, phi2 = i f (1 - g^2) / 2, phi3 = f g.
struct WeierstrassData {
  expr::Expr f;
  expr::Expr g;
  Domain domain;
  cplx z0;
  LVector X0;
};

/// Throws DomainError if z0 is outside the closed domain or on a puncture.
void validate(const WeierstrassData& data);

struct PhiTriple {
  cplx phi1, phi2, phi3;

  /// |phi1^2 + phi2^2 - phi3^2|; zero for every (f, g).
  double identity_residual() const;
  /// identity_residual / (|phi1|^2 + |phi2|^2 + |phi3|^2).
  double relative_identity_residual() const;
  /// |phi1|^2 + |phi2|^2 - |phi3|^2.
  double metric() const;
};

PhiTriple phi_from(cplx f, cplx g);

/// Throws DomainError outside the closed domain or at a puncture, EvalError
/// where f or g cannot be evaluated.
PhiTriple phi(const WeierstrassData& data, cplx z);

struct SurfacePoint {
  LVector X;
  double error = 0.0;
  int intervals = 0;
  Path path;
};

/// X(z) with the path chosen by `q.path` and adaptive quadrature to
/// `q.abs_tol`. z may lie on the domain boundary.
SurfacePoint integrate_surface(const WeierstrassData& data, cplx z, const QuadratureConfig& q);

/// integrate_surface, position only.
LVector evaluate_surface(const WeierstrassData& data, cplx z, const QuadratureConfig& q = {});

/// X along an explicit path starting at z0.
SurfacePoint integrate_along(const WeierstrassData& data, const Path& path, const QuadratureConfig& q);

/// Re integral_a^b phi dw along the straight segment, to rounding accuracy.
/// Used for finite-difference stencils, where differencing two independent
/// path integrals from z0 would lose everything to quadrature noise.
LVector surface_increment(const WeierstrassData& data, cplx a, cplx b);

/// Five-point Laplacian of X at z with spacing h, built from increments.
LVector discrete_laplacian(const WeierstrassData& data, cplx z, double h);

/// (2 Re g, 2 Im g, 1 + |g|^2) / (1 - |g|^2). Throws DegenerateMetricError
/// when |1 - |g|^2| < eps.
LVector gauss_map_of(cplx g, double eps = 1e-12);
LVector gauss_map(const WeierstrassData& data, cplx z, double eps = 1e-12);

/// (N1 + i N2) / (1 + N3) for N on the upper sheet of the hyperboloid.
/// Throws maxsurf::Error off the hyperboloid (relative tolerance `tol`) or on
/// the sheet N3 <= -1.
cplx stereo_inverse(const LVector& N, double tol = 1e-9);
/// Same projection, accepted on either sheet.
cplx stereo_inverse_any_sheet(const LVector& N, double tol = 1e-9);

/// |phi1|^2 + |phi2|^2 - |phi3|^2, evaluated as |f|^2 (1 - |g|^2)^2 / 2.
double conformal_factor(const WeierstrassData& data, cplx z);

enum class Sheet { Upper, Lower };
std::string_view to_string(Sheet s);

/// Upper when |g| < 1 (N3 >= 1), lower when |g| > 1.
Sheet sheet_at(const WeierstrassData& data, cplx z);
/// Sheet at an interior reference point of the domain.
Sheet sheet_of(const WeierstrassData& data);

/// A surface made of one or two patches. Two-patch views come from Schwarz
/// reflection: `primary` on one side of `boundary`, `reflected` on the other;
/// points on the arc itself belong to `primary`.
class SurfaceView {
 public:
  explicit SurfaceView(const WeierstrassData& single);
  SurfaceView(const WeierstrassData& primary, const WeierstrassData& reflected, const ReflectionBoundary& boundary);

  const WeierstrassData& piece_at(cplx z) const;
  bool in_closure(cplx z) const;
  const Domain& domain() const { return domain_; }
  bool is_piecewise() const { return reflected_ != nullptr; }
  const WeierstrassData& primary() const { return *primary_; }

  /// Throws DomainError outside the closed (merged) domain.
  SurfacePoint evaluate(cplx z, const QuadratureConfig& q) const;

 private:
  const WeierstrassData* primary_;
  const WeierstrassData* reflected_ = nullptr;
  std::optional<ReflectionBoundary> boundary_;
  bool primary_positive_ = true;
  Domain domain_;
};

}  // namespace maxsurf
