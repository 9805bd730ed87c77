#include "maxsurf/weierstrass.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace maxsurf {

namespace {

constexpr cplx kI{0.0, 1.0};

std::string point_text(cplx z) { return "(" + std::to_string(z.real()) + ", " + std::to_string(z.imag()) + ")"; }

void require_point(const WeierstrassData& data, cplx z) {
  const double tol = 1e-12 * std::max(1.0, data.domain.scale());
  if (!data.domain.in_closure(z, tol)) throw DomainError("point " + point_text(z) + " is outside " + data.domain.describe());
  if (data.domain.puncture_distance(z) <= 1e-14 * data.domain.scale())
    throw DomainError("point " + point_text(z) + " is a puncture");
}

Vec3c phi_vec(const WeierstrassData& data, cplx z) {
  const PhiTriple p = phi_from(data.f.eval(z), data.g.eval(z));
  return {p.phi1, p.phi2, p.phi3};
}

LVector real_part(const Vec3c& v) { return {v[0].real(), v[1].real(), v[2].real()}; }

}  // namespace

void validate(const WeierstrassData& data) {
  if (!data.X0.is_finite()) throw DomainError("X0 is not finite");
  require_point(data, data.z0);
}

double PhiTriple::identity_residual() const { return std::abs(phi1 * phi1 + phi2 * phi2 - phi3 * phi3); }

double PhiTriple::relative_identity_residual() const {
  const double scale = std::norm(phi1) + std::norm(phi2) + std::norm(phi3);
  if (scale == 0.0) return 0.0;
  return identity_residual() / scale;
}

double PhiTriple::metric() const { return std::norm(phi1) + std::norm(phi2) - std::norm(phi3); }

PhiTriple phi_from(cplx f, cplx g) {
  const cplx g2 = g * g;
  return {0.5 * f * (1.0 + g2), 0.5 * kI * f * (1.0 - g2), f * g};
}

PhiTriple phi(const WeierstrassData& data, cplx z) {
  require_point(data, z);
  return phi_from(data.f.eval(z), data.g.eval(z));
}

SurfacePoint integrate_along(const WeierstrassData& data, const Path& path, const QuadratureConfig& q) {
  SurfacePoint out;
  out.path = path;
  const PathIntegral integral =
      integrate_path(path, [&data](cplx w) { return phi_vec(data, w); }, q.abs_tol, q.max_subdivisions);
  out.X = data.X0 + real_part(integral.value);
  out.error = integral.error;
  out.intervals = integral.intervals;
  return out;
}

SurfacePoint integrate_surface(const WeierstrassData& data, cplx z, const QuadratureConfig& q) {
  require_point(data, z);
  // Endpoints may sit closer to a puncture than the nominal clearance.
  const double near = std::min(data.domain.puncture_distance(data.z0), data.domain.puncture_distance(z));
  const double clearance = std::min(q.clearance, 0.5 * near);
  const Path path = build_path(data.domain, data.z0, z, q.path, clearance);
  return integrate_along(data, path, q);
}

LVector evaluate_surface(const WeierstrassData& data, cplx z, const QuadratureConfig& q) {
  return integrate_surface(data, z, q).X;
}

LVector surface_increment(const WeierstrassData& data, cplx a, cplx b) {
  if (a == b) return {};
  Path path;
  path.pieces.emplace_back(LinePiece{a, b});
  const PathIntegral integral =
      integrate_path(path, [&data](cplx w) { return phi_vec(data, w); }, 1e-300, 400);
  return real_part(integral.value);
}

LVector discrete_laplacian(const WeierstrassData& data, cplx z, double h) {
  LVector sum;
  for (const cplx step : {cplx(h, 0.0), cplx(-h, 0.0), cplx(0.0, h), cplx(0.0, -h)})
    sum += surface_increment(data, z, z + step);
  return sum / (h * h);
}

LVector gauss_map_of(cplx g, double eps) {
  const double m = std::norm(g);
  const double denom = 1.0 - m;
  if (!(std::abs(denom) >= eps))
    throw DegenerateMetricError("Gauss map undefined: |g| = " + std::to_string(std::sqrt(m)) + " is within " +
                                std::to_string(eps) + " of 1");
  return LVector{2.0 * g.real(), 2.0 * g.imag(), 1.0 + m} / denom;
}

LVector gauss_map(const WeierstrassData& data, cplx z, double eps) {
  require_point(data, z);
  return gauss_map_of(data.g.eval(z), eps);
}

cplx stereo_inverse_any_sheet(const LVector& N, double tol) {
  const double q = lorentz_inner(N, N);
  const double e2 = N.x1 * N.x1 + N.x2 * N.x2 + N.x3 * N.x3;
  if (std::abs(q + 1.0) > tol * (1.0 + e2)) throw Error("stereo_inverse: vector is not on the hyperboloid <N,N> = -1");
  if (N.x3 == -1.0) throw Error("stereo_inverse: projection centre (0,0,-1)");
  return cplx(N.x1, N.x2) / (1.0 + N.x3);
}

cplx stereo_inverse(const LVector& N, double tol) {
  if (N.x3 <= -1.0 + tol) throw Error("stereo_inverse: vector lies on the lower sheet N3 <= -1");
  return stereo_inverse_any_sheet(N, tol);
}

double conformal_factor(const WeierstrassData& data, cplx z) {
  require_point(data, z);
  const double fm = std::norm(data.f.eval(z));
  const double gm = std::norm(data.g.eval(z));
  const double k = 1.0 - gm;
  return 0.5 * fm * k * k;
}

std::string_view to_string(Sheet s) { return s == Sheet::Upper ? "upper" : "lower"; }

Sheet sheet_at(const WeierstrassData& data, cplx z) {
  require_point(data, z);
  return std::abs(data.g.eval(z)) < 1.0 ? Sheet::Upper : Sheet::Lower;
}

Sheet sheet_of(const WeierstrassData& data) {
  for (const cplx z : data.domain.grid(3, 3, 0.25, false)) {
    if (!data.domain.contains(z)) continue;
    try {
      return sheet_at(data, z);
    } catch (const Error&) {
    }
  }
  return sheet_at(data, data.z0);
}

// ---------------------------------------------------------------------------

SurfaceView::SurfaceView(const WeierstrassData& single) : primary_(&single), domain_(single.domain) {}

SurfaceView::SurfaceView(const WeierstrassData& primary, const WeierstrassData& reflected,
                         const ReflectionBoundary& boundary)
    : primary_(&primary),
      reflected_(&reflected),
      boundary_(boundary),
      primary_positive_(primary.domain.on_positive_side(boundary)),
      domain_(primary.domain.merged(boundary)) {}

const WeierstrassData& SurfaceView::piece_at(cplx z) const {
  if (reflected_ == nullptr) return *primary_;
  const double s = boundary_->side(z);
  if (s == 0.0) return *primary_;
  return (s > 0.0) == primary_positive_ ? *primary_ : *reflected_;
}

bool SurfaceView::in_closure(cplx z) const {
  const WeierstrassData& piece = piece_at(z);
  return piece.domain.in_closure(z, 1e-12 * std::max(1.0, piece.domain.scale()));
}

SurfacePoint SurfaceView::evaluate(cplx z, const QuadratureConfig& q) const {
  return integrate_surface(piece_at(z), z, q);
}

}  // namespace maxsurf
