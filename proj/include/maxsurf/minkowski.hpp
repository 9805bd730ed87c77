#pragma once

#include <cmath>
#include <string_view>

namespace maxsurf {

/// A point or vector of Lorentz-Minkowski 3-space, signature (+, +, -).
struct LVector {
  double x1 = 0.0;
  double x2 = 0.0;
  double x3 = 0.0;

  constexpr LVector& operator+=(const LVector& o) {
    x1 += o.x1;
    x2 += o.x2;
    x3 += o.x3;
    return *this;
  }
  constexpr LVector& operator-=(const LVector& o) {
    x1 -= o.x1;
    x2 -= o.x2;
    x3 -= o.x3;
    return *this;
  }
  constexpr LVector& operator*=(double s) {
    x1 *= s;
    x2 *= s;
    x3 *= s;
    return *this;
  }

  friend constexpr LVector operator+(LVector a, const LVector& b) { return a += b; }
  friend constexpr LVector operator-(LVector a, const LVector& b) { return a -= b; }
  friend constexpr LVector operator*(LVector a, double s) { return a *= s; }
  friend constexpr LVector operator*(double s, LVector a) { return a *= s; }
  friend constexpr LVector operator/(LVector a, double s) { return a *= 1.0 / s; }
  friend constexpr LVector operator-(const LVector& a) { return {-a.x1, -a.x2, -a.x3}; }
  friend constexpr bool operator==(const LVector&, const LVector&) = default;

  bool is_finite() const { return std::isfinite(x1) && std::isfinite(x2) && std::isfinite(x3); }
};

enum class CausalClass { Spacelike, Lightlike, Timelike };

std::string_view to_string(CausalClass c);

constexpr double lorentz_inner(const LVector& x, const LVector& y) {
  return x.x1 * y.x1 + x.x2 * y.x2 - x.x3 * y.x3;
}

/// a ^ b = (a2 b3 - a3 b2, a3 b1 - a1 b3, a2 b1 - a1 b2). Orthogonal to a and b
/// under the Lorentz inner product.
constexpr LVector lorentz_cross(const LVector& a, const LVector& b) {
  return {a.x2 * b.x3 - a.x3 * b.x2, a.x3 * b.x1 - a.x1 * b.x3, a.x2 * b.x1 - a.x1 * b.x2};
}

/// sqrt(|<x, x>|).
inline double lnorm(const LVector& x) { return std::sqrt(std::abs(lorentz_inner(x, x))); }

/// Euclidean length, used for relative tolerances only.
inline double euclidean_norm(const LVector& x) { return std::sqrt(x.x1 * x.x1 + x.x2 * x.x2 + x.x3 * x.x3); }

/// Sign of <x, x> with an exact zero test. The zero vector is spacelike.
CausalClass causal_class(const LVector& x);

/// As causal_class, but |<x, x>| <= eps * |x|^2 (Euclidean) counts as lightlike.
CausalClass causal_class_tol(const LVector& x, double eps);

/// The plane P(n, d) = { x : <x, n> = d }.
class Plane {
 public:
  /// Throws maxsurf::Error on a zero or non-finite normal.
  Plane(LVector normal, double offset);

  const LVector& normal() const { return n_; }
  double offset() const { return d_; }

  /// <x, n> - d.
  double level(const LVector& x) const { return lorentz_inner(x, n_) - d_; }

 private:
  LVector n_;
  double d_;
};

/// A plane is spacelike, lightlike or timelike when its normal is timelike,
/// lightlike or spacelike; independent of the offset.
CausalClass plane_class(const Plane& p);

/// plane_class with the lightlike test relaxed to |<n, n>| <= eps |n|^2.
CausalClass plane_class_tol(const Plane& p, double eps);

}  // namespace maxsurf
