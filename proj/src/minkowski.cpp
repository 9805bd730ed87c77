#include "maxsurf/minkowski.hpp"

#include "maxsurf/error.hpp"

namespace maxsurf {

std::string_view to_string(CausalClass c) {
  switch (c) {
    case CausalClass::Spacelike: return "spacelike";
    case CausalClass::Lightlike: return "lightlike";
    case CausalClass::Timelike: return "timelike";
  }
  return "?";
}

CausalClass causal_class(const LVector& x) {
  if (x == LVector{}) return CausalClass::Spacelike;
  const double q = lorentz_inner(x, x);
  if (q > 0.0) return CausalClass::Spacelike;
  if (q < 0.0) return CausalClass::Timelike;
  return CausalClass::Lightlike;
}

CausalClass causal_class_tol(const LVector& x, double eps) {
  if (x == LVector{}) return CausalClass::Spacelike;
  const double q = lorentz_inner(x, x);
  const double e2 = x.x1 * x.x1 + x.x2 * x.x2 + x.x3 * x.x3;
  if (std::abs(q) <= eps * e2) return CausalClass::Lightlike;
  return q > 0.0 ? CausalClass::Spacelike : CausalClass::Timelike;
}

Plane::Plane(LVector normal, double offset) : n_(normal), d_(offset) {
  if (!n_.is_finite() || !std::isfinite(d_)) throw Error("plane: non-finite normal or offset");
  if (n_ == LVector{}) throw Error("plane: zero normal");
}

namespace {

CausalClass dual(CausalClass normal) {
  switch (normal) {
    case CausalClass::Timelike: return CausalClass::Spacelike;
    case CausalClass::Spacelike: return CausalClass::Timelike;
    case CausalClass::Lightlike: return CausalClass::Lightlike;
  }
  return CausalClass::Lightlike;
}

}  // namespace

CausalClass plane_class(const Plane& p) {
  if (p.normal() == LVector{}) throw Error("plane: zero normal");
  return dual(causal_class(p.normal()));
}

CausalClass plane_class_tol(const Plane& p, double eps) {
  if (p.normal() == LVector{}) throw Error("plane: zero normal");
  return dual(causal_class_tol(p.normal(), eps));
}

}  // namespace maxsurf
