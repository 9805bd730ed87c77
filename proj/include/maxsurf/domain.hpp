#pragma once

#include <limits>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "maxsurf/error.hpp"
#include "maxsurf/expr.hpp"

namespace maxsurf {

enum class Half { Full, Upper, Lower };

/// An excluded point of the parameter domain. `pole_order` > 0 declares a pole
/// of g there (and so a zero of f of twice that order).
struct Puncture {
  cplx at;
  int pole_order = 0;
};

/// The arc across which data is Schwarz-reflected: either the real axis,
/// reflection z -> conj(z), or the circle |z| = rho, reflection z -> rho^2 / conj(z).
///
/// Both reflections are z -> conj(k(z)) with k holomorphic: k(z) = z and
/// k(z) = rho^2 / z respectively.
class ReflectionBoundary {
 public:
  static ReflectionBoundary real_axis() { return ReflectionBoundary(0.0); }
  static ReflectionBoundary circle(double rho);

  bool is_circle() const { return rho_ > 0.0; }
  double radius() const { return rho_; }

  cplx reflect(cplx z) const;
  expr::Expr inner_map() const;
  expr::Expr inner_map_derivative() const;

  /// Positive above the axis / inside the circle, negative on the other side.
  double side(cplx z) const;

  /// Closest point of the arc (the whole axis or circle) to z.
  cplx project(cplx z) const;

  /// `real-axis` or `circle <rho>`.
  std::string describe() const;
  static ReflectionBoundary parse(std::string_view text);

 private:
  explicit ReflectionBoundary(double rho) : rho_(rho) {}
  double rho_;
};

/// Parameter domains: disks, half-disks, annuli (possibly punctured or
/// unbounded) and half-annuli, centred at the origin, minus punctures.
///
/// The radial extent is r_in < |z| < r_out; `center_included` admits z = 0
/// for disk kinds. Half restricts to Im z > 0 or Im z < 0.
class Domain {
 public:
  /// The unit disk.
  Domain() : Domain(0.0, 1.0, Half::Full, true) {}
  static Domain disk(double radius);
  static Domain half_disk(double radius, Half half = Half::Upper);
  static Domain annulus(double r_in, double r_out);
  static Domain half_annulus(double r_in, double r_out, Half half = Half::Upper);
  static Domain punctured_disk(double radius);
  static Domain exterior(double radius);

  /// Throws maxsurf::Error when the point is not inside the region.
  Domain with_puncture(Puncture p) const;

  double inner_radius() const { return r_in_; }
  double outer_radius() const { return r_out_; }
  Half half() const { return half_; }
  bool center_included() const { return center_; }
  const std::vector<Puncture>& punctures() const { return punctures_; }

  /// The open region, ignoring punctures.
  bool in_region(cplx z) const;
  /// The closed region, with slack `tol`, ignoring punctures.
  bool in_closure(cplx z, double tol = 1e-12) const;
  /// Open region minus punctures.
  bool contains(cplx z) const;
  /// Distance to the nearest puncture (infinity when there are none).
  double puncture_distance(cplx z) const;

  /// Radial extent used for sampling: finite bounds for punctured and
  /// unbounded kinds.
  double sampling_inner_radius() const;
  double sampling_outer_radius() const;
  /// Typical length of the domain.
  double scale() const;

  /// Disks and half-disks are sampled on an inscribed Cartesian rectangle,
  /// the ring kinds on a polar grid.
  bool polar_sampling() const { return !center_; }

  /// n1 x n2 grid, row-major (index i * n2 + j). `inset` in [0, 0.5) shrinks the
  /// grid away from the domain boundary as a fraction of its extent. Polar
  /// grids of full rings span the closed angle range [-pi, pi] when
  /// `closed_angle`, otherwise [-pi, pi).
  std::vector<cplx> grid(int n1, int n2, double inset, bool closed_angle = true) const;

  /// The mirror image of this domain in `b`, with punctures mirrored.
  Domain reflected(const ReflectionBoundary& b) const;
  /// This domain together with its mirror image and the arc between them.
  Domain merged(const ReflectionBoundary& b) const;
  /// The natural reflection arc: the real axis for half kinds, the outer
  /// circle for ring kinds, none for full disks.
  bool has_default_boundary() const;
  ReflectionBoundary default_boundary() const;
  /// True when data on this domain sits on the positive side of `b`.
  bool on_positive_side(const ReflectionBoundary& b) const;
  /// Points of the arc `b` lying on this domain's boundary, evenly spread and
  /// away from the arc's endpoints.
  std::vector<cplx> boundary_samples(const ReflectionBoundary& b, int count) const;

  /// Config syntax, e.g. `annulus 0.2 1`. Punctures are not included.
  std::string describe() const;
  static Domain parse(std::string_view text);

 private:
  Domain(double r_in, double r_out, Half half, bool center) : r_in_(r_in), r_out_(r_out), half_(half), center_(center) {}

  double r_in_;
  double r_out_;
  Half half_;
  bool center_;
  std::vector<Puncture> punctures_;
  // Sampling extent for reflected domains whose true extent is unbounded.
  double hint_in_ = std::numeric_limits<double>::quiet_NaN();
  double hint_out_ = std::numeric_limits<double>::quiet_NaN();
};

// ---------------------------------------------------------------------------
// Integration paths

struct LinePiece {
  cplx a, b;
};

/// Arc of the circle |z| = radius from angle theta0 to theta1.
struct ArcPiece {
  double radius;
  double theta0, theta1;
};

using PathPiece = std::variant<LinePiece, ArcPiece>;

struct Path {
  std::vector<PathPiece> pieces;

  cplx start() const;
  cplx end() const;
  std::string describe() const;
};

/// Point and derivative of a piece at parameter t (t in [0, 1] for lines,
/// the angle for arcs).
cplx piece_point(const PathPiece& p, double t);
cplx piece_velocity(const PathPiece& p, double t);
/// Parameter interval of a piece.
std::pair<double, double> piece_interval(const PathPiece& p);

enum class PathPolicy { Auto, Straight, Polar };

/// True when every point of the path lies in the domain's closure and stays
/// at least `clearance` away from each puncture.
bool path_admissible(const Domain& d, const Path& path, double clearance);

/// Straight segment when admissible; otherwise (Auto) radial-then-arc and
/// arc-then-radial paths for ring domains, then a two-segment detour around
/// the offending puncture. Throws DomainError when nothing admissible exists.
Path build_path(const Domain& d, cplx from, cplx to, PathPolicy policy, double clearance);

/// An admissible path homotopic to `primary` (same ends, no puncture or hole
/// between them) that differs from it, or
/// `primary` itself when there is none.
Path alternative_path(const Domain& d, const Path& primary, double clearance);

}  // namespace maxsurf
