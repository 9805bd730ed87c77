#pragma once

#include <array>
#include <string>
#include <vector>

#include "json.hpp"
#include "maxsurf/extension.hpp"
#include "maxsurf/weierstrass.hpp"

namespace maxsurf {

/// One quantitative check. `relation` is "<=" (value must not exceed the
/// tolerance) or ">=" (value must reach it). Informational records always pass.
struct CheckRecord {
  std::string name;
  int samples = 0;
  double value = 0.0;
  std::string relation = "<=";
  double tolerance = 0.0;
  bool pass = false;
  bool informational = false;
  std::string note;
};

struct DiagnosticsReport {
  nlohmann::ordered_json subject = nlohmann::ordered_json::object();
  std::vector<CheckRecord> checks;
  std::vector<std::string> notes;

  bool pass() const;
  /// Schema "maxsurf.report/1"; keys in a fixed order.
  nlohmann::ordered_json to_json() const;
};

struct GridSpec {
  int n1 = 9, n2 = 9;
  double inset = 0.1;
  QuadratureConfig q;
  int probes = 5;  // points used for the costlier checks
  std::array<double, 3> harmonic_steps{1e-3, 5e-4, 2.5e-4};  // times the domain scale
  double cross_step = 1e-4;                                   // times the domain scale
  bool parallel = true;
};

DiagnosticsReport full_diagnostics(const WeierstrassData& data, const GridSpec& grid = {});
/// Both pieces, C1 matching across the arc, and (when `plane` is given)
/// containment and odd symmetry.
DiagnosticsReport full_diagnostics(const WeierstrassData& primary, const WeierstrassData& reflected,
                                   const ReflectionBoundary& b, const Plane* plane, const GridSpec& grid = {});
/// As above plus the contact measurement records.
DiagnosticsReport full_diagnostics(const ExtendedSurface& ext, const GridSpec& grid = {});

/// (sinh u cos v, sinh u sin v, u): the catenoid X(e^{u+iv}) for f = 1/z^2,
/// g = z, z0 = 1, X0 = 0.
LVector catenoid_reference(double u, double v);

struct HarmonicityResult {
  std::vector<double> steps;
  std::vector<double> residuals;  // max |Delta_h X| over points and coordinates
  double order = 0.0;             // least-squares slope of log residual vs log h
  bool rounding_level = false;    // residuals at the floor: exact to rounding
  bool pass() const { return rounding_level || order >= 1.8; }
};

HarmonicityResult harmonicity(const WeierstrassData& data, const std::vector<cplx>& points,
                              const std::vector<double>& steps);

struct CrossProductResult {
  double residual = 0.0;  // |X_u ^ X_v - s w| / |X_u ^ X_v|
  double scale = 0.0;     // fitted s
};

/// X_u ^ X_v from central differences against
/// w = |f|^2 (1 - |g|^2) (2 Re g, 2 Im g, 1 + |g|^2), up to a fitted scalar.
CrossProductResult cross_product_normal(const WeierstrassData& data, cplx z, double h);
CheckRecord check_cross_product_normal(const WeierstrassData& data, cplx z, double h);

/// (1 / 2 pi i) times the integral of e'/e around |w - p| = radius, by the
/// M-point trapezoid rule. NaN when e vanishes or fails on the circle.
double winding_order(const expr::Expr& e, cplx p, double radius, int m = 128);
/// Checks that g has a pole of the declared order m at the puncture and f a
/// zero of order 2m.
CheckRecord check_pole_zero(const WeierstrassData& data, const Puncture& p);

struct ObstructionEntry {
  enum class Kind { None, ImpossibleContact, Degenerate, OrthogonalOutOfScope };
  Kind kind = Kind::None;
  std::string message;
  double angle_limit = 0.0;  // max |<N, n>| over the boundary
  double g_gap = 0.0;        // lightlike: max |g - w*|
  CheckRecord record() const;
};

/// Classifies boundary limits of <N, n> and g against the plane's class.
/// Spacelike with <N, n> -> 0 is impossible; lightlike with g -> w* =
/// (n1 + i n2) / n3 is degenerate (X_u ^ X_v = 0); timelike with <N, n> -> 0
/// is the orthogonal case, out of scope.
ObstructionEntry classify_contact_profile(CausalClass plane_class, const LVector& n,
                                          const std::vector<double>& angle_limits,
                                          const std::vector<cplx>& g_limits, double tol = 1e-8);
/// Measures the profile from data along `b`, then classifies it.
ObstructionEntry check_orthogonality_obstruction(const Plane& plane, const WeierstrassData& data,
                                                 const ReflectionBoundary& b, const ContactOptions& options = {});

nlohmann::ordered_json to_json(const CheckRecord& r);
nlohmann::ordered_json to_json(const CircleOrLine& l);
nlohmann::ordered_json to_json(const ContactData& c);
nlohmann::ordered_json to_json(const MatchingReport& m);

}  // namespace maxsurf
