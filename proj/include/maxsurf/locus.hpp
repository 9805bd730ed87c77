#pragma once

#include <string>
#include <vector>

#include "maxsurf/expr.hpp"
#include "maxsurf/minkowski.hpp"

namespace maxsurf {

/// A circle (center, radius) or a line (point, unit direction) in the w-plane.
class CircleOrLine {
 public:
  static CircleOrLine circle(cplx center, double radius);
  static CircleOrLine line(cplx point, cplx direction);

  bool is_circle() const { return circle_; }
  cplx center() const { return a_; }
  double radius() const { return r_; }
  cplx point() const { return a_; }
  cplx direction() const { return dir_; }
  /// 1 / radius for circles, 0 for lines.
  double curvature() const { return circle_ ? 1.0 / r_ : 0.0; }

  /// Inversion in the circle, or mirror image in the line.
  cplx reflect(cplx w) const;
  /// Unsigned Euclidean distance from w to the locus.
  double distance(cplx w) const;

  /// The reflection written as a holomorphic function of s = conj(w):
  ///   center + r^2 / (s - conj(center))   or   point + dir^2 (s - conj(point)).
  expr::Expr reflect_conjugated(const expr::Expr& s) const;

  std::string describe() const;

  /// Max distance of the fitted samples to the locus (0 unless fitted).
  double fit_residual = 0.0;

 private:
  CircleOrLine(bool circle, cplx a, double r, cplx dir) : circle_(circle), a_(a), r_(r), dir_(dir) {}
  bool circle_;
  cplx a_;
  double r_;
  cplx dir_;
};

/// Least-squares circle or line through the points: algebraic fit
/// A|w|^2 + D x + E y + F = 0 by SVD, then geometric refinement. A line is
/// returned when the fitted curvature is below `line_curvature`. Throws
/// ContactError (InsufficientSamples) for fewer than three distinct points.
CircleOrLine fit_circle_or_line(const std::vector<cplx>& points, double line_curvature = 1e-6);

/// The set of g values whose Gauss map meets the normal n at <N, n> = c:
///   (c - n3)|w|^2 + 2 n1 Re w + 2 n2 Im w - (n3 + c) = 0.
/// Throws ContactError (GeometryMismatch) when that set is empty or degenerate.
CircleOrLine contact_locus(const LVector& n, double c);

}  // namespace maxsurf
