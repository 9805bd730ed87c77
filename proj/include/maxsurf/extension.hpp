#pragma once

#include <limits>
#include <string>
#include <vector>

#include "maxsurf/locus.hpp"
#include "maxsurf/weierstrass.hpp"

namespace maxsurf {

struct ContactOptions {
  int samples = 24;              // boundary points
  int levels = 6;                // approach offsets delta / 2^k
  double approach_scale = 1e-2;  // delta as a fraction of the domain scale
  double orthogonal_tol = 1e-8;
  double deviation_tol = 1e-6;  // relative to max(1, |c|)
  double mismatch_tol = 1e-6;   // fitted vs closed-form locus
  double conelike_tol = 1e-6;   // ||g| - 1| on the boundary
};

/// g and <N, n> extrapolated to the boundary arc from inside the domain.
struct ApproachProfile {
  std::vector<cplx> points;   // on the arc
  std::vector<cplx> g;        // limits of g
  std::vector<double> angle;  // limits of <N, n>; NaN where N degenerates
};

ApproachProfile approach_profile(const WeierstrassData& data, const LVector& n, const ReflectionBoundary& b,
                                 const ContactOptions& options = {});

/// Rescales spacelike and timelike normals to unit Lorentz length; lightlike
/// planes are returned unchanged.
Plane normalized_plane(const Plane& p);

struct ContactData {
  Plane plane{LVector{0.0, 0.0, 1.0}, 0.0};  // normalized
  CausalClass plane_class = CausalClass::Timelike;
  bool conelike = false;  // |g| = 1 on the arc; <N, n> has no finite limit
  double c = std::numeric_limits<double>::quiet_NaN();
  double deviation = std::numeric_limits<double>::quiet_NaN();
  double theta = std::numeric_limits<double>::quiet_NaN();   // spacelike: cosh(theta) = |c|
  double lambda = std::numeric_limits<double>::quiet_NaN();  // timelike: c = 1/lambda; lightlike: c = 1 + lambda
  CircleOrLine fitted = CircleOrLine::circle(0.0, 1.0);
  CircleOrLine closed = CircleOrLine::circle(0.0, 1.0);
  double discrepancy = 0.0;  // max distance of boundary g values to `closed`
  ApproachProfile profile;
  std::vector<std::string> notes;
};

/// Measures the constant-angle hypothesis along the arc `b` and fits the
/// locus containing g(arc). Throws ContactError: OrthogonalContact when
/// c = 0, HypothesisViolation when <N, n> is not constant, GeometryMismatch
/// when the fitted locus disagrees with the one implied by (n, c).
ContactData measure_contact(const WeierstrassData& data, const Plane& plane, const ReflectionBoundary& b,
                            const ContactOptions& options = {});

/// The harmonic function <X, n> reflected oddly across the arc. Its
/// derivative is eta = n1 phi1 + n2 phi2 - n3 phi3 = f q(g). Axis-aligned
/// normals use the coordinate itself: x3 (eta = phi3), x2 (eta = phi2) or
/// psi = x1 - x3 (eta = phi1 - phi3).
struct HarmonicDatum {
  std::string label;
  LVector n;

  static HarmonicDatum for_normal(const LVector& n);
  expr::Expr q(const expr::Expr& g) const;
  cplx q(cplx g) const;
};

struct ReflectedPair {
  expr::Expr f, g;
};

/// Schwarz reflection of (f, g) across `b`, with g(b) on `locus`:
///   g_ext = R(sconj(g) o k),  eta_ext = -(sconj(eta) o k) k',  f_ext = eta_ext / q(g_ext)
/// where the arc reflection is z -> conj(k(z)) and R is the reflection in `locus`.
ReflectedPair reflect_weierstrass(const expr::Expr& f, const expr::Expr& g, const CircleOrLine& locus,
                                  const HarmonicDatum& datum, const ReflectionBoundary& b);

struct Gap {
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct MatchingReport {
  int samples = 0;
  std::vector<Gap> gaps;
  bool pass() const;
};

struct MatchingInputs {
  const Plane* plane = nullptr;         // containment and symmetry gaps
  const CircleOrLine* locus = nullptr;  // boundary locus gap
  QuadratureConfig q;
  int samples = 16;
};

/// Value and first-derivative gaps of g, f and phi_k across the arc, plus
/// (when given) locus, plane containment, continuity of X and odd symmetry of
/// <X, n> - d.
MatchingReport match_pieces(const WeierstrassData& primary, const WeierstrassData& reflected,
                            const ReflectionBoundary& b, const MatchingInputs& in);

struct ExtendOptions {
  ContactOptions contact;
  QuadratureConfig q;
  int matching_samples = 16;
  int singular_grid = 12;
};

struct ExtendedSurface {
  WeierstrassData original;
  WeierstrassData reflected;
  ReflectionBoundary boundary = ReflectionBoundary::real_axis();
  ContactData contact;
  HarmonicDatum datum;
  MatchingReport matching;
  std::vector<std::string> warnings;

  /// The assembled surface. Refers to this object; do not outlive it.
  SurfaceView view() const { return SurfaceView(original, reflected, boundary); }
};

/// Builds the reflected piece for measured contact data and verifies the
/// matching. Throws ContactError (SingularReconstruction) when q(g_ext)
/// vanishes on the reflected sample grid.
ExtendedSurface assemble(const WeierstrassData& data, const ContactData& contact, const ReflectionBoundary& b,
                         const ExtendOptions& options = {});

ExtendedSurface extend_spacelike(const WeierstrassData& data, const ContactData& contact,
                                 const ReflectionBoundary& b, const ExtendOptions& options = {});
ExtendedSurface extend_timelike(const WeierstrassData& data, const ContactData& contact,
                                const ReflectionBoundary& b, const ExtendOptions& options = {});
ExtendedSurface extend_lightlike(const WeierstrassData& data, const ContactData& contact,
                                 const ReflectionBoundary& b, const ExtendOptions& options = {});

/// Measures contact across `b` and dispatches on the plane's class.
ExtendedSurface extend_across(const WeierstrassData& data, const Plane& plane, const ReflectionBoundary& b,
                              const ExtendOptions& options = {});
/// extend_across the domain's natural boundary.
ExtendedSurface extend(const WeierstrassData& data, const Plane& plane, const ExtendOptions& options = {});
/// Reflection across |z| = rho for a spacelike plane; rho may be where
/// |g| = 1 (a conelike singularity).
ExtendedSurface extend_circular(const WeierstrassData& data, double rho, const Plane& plane,
                                const ExtendOptions& options = {});

}  // namespace maxsurf
