#include "maxsurf/extension.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <numbers>

namespace maxsurf {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr cplx kI{0.0, 1.0};

std::string num(double x) {
  char buf[32];
  auto r = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 10);
  return std::string(buf, r.ptr);
}

// Value at t = 0 of the polynomial through (t_k, y_k).
template <class T>
T neville_at_zero(const std::vector<double>& t, std::vector<T> y) {
  const std::size_t n = t.size();
  for (std::size_t m = 1; m < n; ++m)
    for (std::size_t i = 0; i + m < n; ++i) y[i] = (t[i + m] * y[i] - t[i] * y[i + 1]) / (t[i + m] - t[i]);
  return y[0];
}

cplx inward(const Domain& d, const ReflectionBoundary& b, cplx p) {
  const bool positive = d.on_positive_side(b);
  if (!b.is_circle()) return positive ? kI : -kI;
  const cplx radial = p / std::abs(p);
  return positive ? -radial : radial;
}

double rel_gap(cplx a, cplx b) { return std::abs(a - b) / std::max(1.0, std::abs(a)); }

std::array<expr::Expr, 3> phi_exprs(const expr::Expr& f, const expr::Expr& g) {
  using namespace expr;
  const Expr g2 = power(g, 2);
  return {constant(0.5) * f * (constant(1.0) + g2), constant(0.5 * kI) * f * (constant(1.0) - g2), f * g};
}

bool proportional(const LVector& n, const LVector& axis) {
  const LVector c = lorentz_cross(n, axis);
  return euclidean_norm(c) <= 1e-14 * euclidean_norm(n) * euclidean_norm(axis);
}

[[noreturn]] void singular_at(cplx z, cplx gz) {
  throw ContactError(ContactError::Kind::SingularReconstruction,
                     "f cannot be reconstructed: q(g) vanishes at (" + num(z.real()) + ", " + num(z.imag()) +
                         ") on the reflected domain (g = " + num(gz.real()) + " + " + num(gz.imag()) + "i)");
}

// q(g_ext) must not vanish on the reflected domain. Grid points are tested
// directly; zeros between them are found by the argument principle on each
// grid cell (winding > 0 counts zeros net of poles, and poles of g come
// with matching zeros of f, so only a positive winding is singular).
void singular_check(const WeierstrassData& reflected, const HarmonicDatum& datum, int n) {
  const std::vector<cplx> pts = reflected.domain.grid(n, n, 0.01);
  std::vector<char> usable(pts.size(), 0);
  auto q_at = [&](cplx z) {
    cplx gz;
    try {
      gz = reflected.g.eval(z);
    } catch (const EvalError& e) {
      throw ContactError(ContactError::Kind::SingularReconstruction,
                         std::string("extended g is singular on the reflected domain: ") + e.what());
    }
    const cplx qz = datum.q(gz);
    if (std::abs(qz) <= 1e-10 * (1.0 + std::norm(gz))) singular_at(z, gz);
    return qz;
  };
  for (std::size_t k = 0; k < pts.size(); ++k) {
    if (!reflected.domain.contains(pts[k])) continue;
    q_at(pts[k]);
    usable[k] = 1;
  }
  constexpr int kPerSide = 8;
  for (int i = 0; i + 1 < n; ++i) {
    for (int j = 0; j + 1 < n; ++j) {
      const std::array<std::size_t, 4> idx{static_cast<std::size_t>(i * n + j), static_cast<std::size_t>((i + 1) * n + j),
                                           static_cast<std::size_t>((i + 1) * n + j + 1),
                                           static_cast<std::size_t>(i * n + j + 1)};
      if (!(usable[idx[0]] && usable[idx[1]] && usable[idx[2]] && usable[idx[3]])) continue;
      double area = 0.0, turn = 0.0;
      bool ok = true;
      cplx prev = q_at(pts[idx[0]]);
      for (int s = 0; s < 4 && ok; ++s) {
        const cplx a = pts[idx[s]], b = pts[idx[(s + 1) % 4]];
        area += (std::conj(a) * b).imag();
        for (int t = 1; t <= kPerSide; ++t) {
          const cplx z = a + (b - a) * (static_cast<double>(t) / kPerSide);
          if (!reflected.domain.contains(z)) {
            ok = false;
            break;
          }
          const cplx cur = q_at(z);
          turn += std::arg(cur / prev);
          prev = cur;
        }
      }
      if (!ok || area == 0.0) continue;
      const double winding = (area > 0.0 ? turn : -turn) / (2.0 * std::numbers::pi);
      if (winding > 0.5) {
        const cplx mid = 0.25 * (pts[idx[0]] + pts[idx[1]] + pts[idx[2]] + pts[idx[3]]);
        throw ContactError(ContactError::Kind::SingularReconstruction,
                           "f cannot be reconstructed: q(g) has a zero near (" + num(mid.real()) + ", " +
                               num(mid.imag()) + ") on the reflected domain");
      }
    }
  }
}

}  // namespace

ApproachProfile approach_profile(const WeierstrassData& data, const LVector& n, const ReflectionBoundary& b,
                                 const ContactOptions& options) {
  if (options.levels < 2) throw Error("approach profile: need at least two levels");
  ApproachProfile out;
  out.points = data.domain.boundary_samples(b, options.samples);
  const double delta = options.approach_scale * data.domain.scale();
  std::vector<double> t(options.levels);
  for (int k = 0; k < options.levels; ++k) t[k] = delta / std::ldexp(1.0, k);
  for (const cplx p : out.points) {
    const cplx dir = inward(data.domain, b, p);
    std::vector<cplx> gs(t.size());
    std::vector<double> as(t.size());
    for (std::size_t k = 0; k < t.size(); ++k) {
      gs[k] = data.g.eval(p + t[k] * dir);
      const double m = 1.0 - std::norm(gs[k]);
      as[k] = m == 0.0 ? kNaN : lorentz_inner(gauss_map_of(gs[k], 0.0), n);
    }
    out.g.push_back(neville_at_zero(t, gs));
    out.angle.push_back(neville_at_zero(t, as));
  }
  return out;
}

Plane normalized_plane(const Plane& p) {
  const CausalClass cls = plane_class_tol(p, 1e-12);
  if (cls == CausalClass::Lightlike) return p;
  const double s = lnorm(p.normal());
  return Plane(p.normal() / s, p.offset() / s);
}

ContactData measure_contact(const WeierstrassData& data, const Plane& plane, const ReflectionBoundary& b,
                            const ContactOptions& options) {
  using Kind = ContactError::Kind;
  ContactData cd;
  cd.plane = normalized_plane(plane);
  cd.plane_class = plane_class_tol(cd.plane, 1e-12);
  const LVector& n = cd.plane.normal();
  cd.profile = approach_profile(data, n, b, options);
  const auto& gs = cd.profile.g;

  double cone_gap = 0.0;
  for (const cplx g : gs) cone_gap = std::max(cone_gap, std::abs(std::abs(g) - 1.0));
  if (cone_gap < options.conelike_tol) {
    cd.conelike = true;
    cd.fitted = fit_circle_or_line(gs);
    cd.closed = CircleOrLine::circle(0.0, 1.0);
    for (const cplx g : gs) cd.discrepancy = std::max(cd.discrepancy, cd.closed.distance(g));
    cd.notes.push_back("conelike contact: |g| = 1 along the arc, the metric degenerates there and <N, n> has no "
                       "finite limit; the angle test is skipped");
    if (cd.discrepancy > options.mismatch_tol)
      throw ContactError(Kind::GeometryMismatch, "fitted locus " + cd.fitted.describe() +
                                                     " does not match the unit circle; discrepancy " +
                                                     num(cd.discrepancy));
    return cd;
  }

  const auto& as = cd.profile.angle;
  double amax = 0.0;
  for (const double a : as) {
    if (std::isnan(a))
      throw ContactError(Kind::HypothesisViolation,
                         "constant-angle hypothesis violated: the Gauss map degenerates on part of the boundary");
    amax = std::max(amax, std::abs(a));
  }
  if (amax < options.orthogonal_tol) {
    if (cd.plane_class == CausalClass::Spacelike)
      throw ContactError(Kind::OrthogonalContact,
                         "impossible contact: a spacelike plane cannot meet a maximal surface orthogonally "
                         "(it would force 1 + |g|^2 = 0)");
    throw ContactError(Kind::OrthogonalContact,
                       "orthogonal contact (c = 0) is excluded: this is the symmetric-reflection case, "
                       "which is out of scope");
  }
  double sum = 0.0;
  for (const double a : as) sum += a;
  cd.c = sum / static_cast<double>(as.size());
  cd.deviation = 0.0;
  for (const double a : as) cd.deviation = std::max(cd.deviation, std::abs(a - cd.c));
  if (cd.deviation > options.deviation_tol * std::max(1.0, std::abs(cd.c)))
    throw ContactError(Kind::HypothesisViolation, "constant-angle hypothesis violated: <N, n> varies by " +
                                                      num(cd.deviation) + " along the boundary (mean " +
                                                      num(cd.c) + ")");

  switch (cd.plane_class) {
    case CausalClass::Spacelike:
      if (std::abs(cd.c) >= 1.0) cd.theta = std::acosh(std::abs(cd.c));
      break;
    case CausalClass::Timelike: cd.lambda = 1.0 / cd.c; break;
    case CausalClass::Lightlike: cd.lambda = cd.c - 1.0; break;
  }

  cd.fitted = fit_circle_or_line(gs);
  cd.closed = contact_locus(n, cd.c);
  for (const cplx g : gs) cd.discrepancy = std::max(cd.discrepancy, cd.closed.distance(g));
  if (cd.discrepancy > options.mismatch_tol)
    throw ContactError(Kind::GeometryMismatch, "fitted locus " + cd.fitted.describe() +
                                                   " disagrees with the closed form " + cd.closed.describe() +
                                                   " implied by c = " + num(cd.c) + "; discrepancy " +
                                                   num(cd.discrepancy));

  if (cd.plane_class == CausalClass::Spacelike && !std::isnan(cd.theta) && cd.fitted.is_circle()) {
    const double r = cd.fitted.radius(), h = cd.theta / 2.0;
    const double t = std::tanh(h), ct = 1.0 / t;
    if (std::abs(r - t) <= std::abs(r - ct))
      cd.notes.push_back("boundary radius " + num(r) + " equals tanh(theta/2) = " + num(t) +
                         ": upper sheet, inversion coefficient tanh^2(theta/2)");
    else
      cd.notes.push_back("boundary radius " + num(r) + " equals coth(theta/2) = " + num(ct) +
                         ": lower sheet, inversion coefficient coth^2(theta/2)");
  }
  return cd;
}

HarmonicDatum HarmonicDatum::for_normal(const LVector& n) {
  if (proportional(n, {0.0, 0.0, 1.0})) return {"x3", n};
  if (proportional(n, {0.0, 1.0, 0.0})) return {"x2", n};
  if (proportional(n, {1.0, 0.0, 1.0})) return {"psi", n};
  return {"<X,n>", n};
}

expr::Expr HarmonicDatum::q(const expr::Expr& g) const {
  using namespace expr;
  if (label == "x3") return g;
  if (label == "x2") return constant(0.5 * kI) * (constant(1.0) - power(g, 2));
  if (label == "psi") return constant(0.5) * power(constant(1.0) - g, 2);
  const cplx c0 = 0.5 * n.x1 + 0.5 * kI * n.x2, c2 = 0.5 * n.x1 - 0.5 * kI * n.x2;
  return constant(c0) + constant(-n.x3) * g + constant(c2) * power(g, 2);
}

cplx HarmonicDatum::q(cplx g) const {
  if (label == "x3") return g;
  if (label == "x2") return 0.5 * kI * (1.0 - g * g);
  if (label == "psi") return 0.5 * (1.0 - g) * (1.0 - g);
  return 0.5 * n.x1 * (1.0 + g * g) + 0.5 * kI * n.x2 * (1.0 - g * g) - n.x3 * g;
}

ReflectedPair reflect_weierstrass(const expr::Expr& f, const expr::Expr& g, const CircleOrLine& locus,
                                  const HarmonicDatum& datum, const ReflectionBoundary& b) {
  using namespace expr;
  const bool circle = b.is_circle();
  const Expr k = b.inner_map();
  auto pull = [&](const Expr& e) { return circle ? compose(sconj(e), k) : sconj(e); };
  ReflectedPair out;
  out.g = locus.reflect_conjugated(pull(g));
  const Expr eta = f * datum.q(g);
  const Expr eta_ext = circle ? -(pull(eta) * b.inner_map_derivative()) : -pull(eta);
  out.f = eta_ext / datum.q(out.g);
  return out;
}

bool MatchingReport::pass() const {
  return std::all_of(gaps.begin(), gaps.end(), [](const Gap& g) { return g.pass; });
}

MatchingReport match_pieces(const WeierstrassData& primary, const WeierstrassData& reflected,
                            const ReflectionBoundary& b, const MatchingInputs& in) {
  MatchingReport rep;
  const std::vector<cplx> pts = primary.domain.boundary_samples(b, std::max(2, in.samples));
  rep.samples = static_cast<int>(pts.size());
  const double inf = std::numeric_limits<double>::infinity();

  auto add = [&rep](std::string name, double value, double tol) {
    rep.gaps.push_back({std::move(name), value, tol, value <= tol});
  };

  // Values and first derivatives from both formula sets.
  const auto pa = phi_exprs(primary.f, primary.g), pb = phi_exprs(reflected.f, reflected.g);
  struct Pair {
    std::string name;
    expr::Expr a, b;
  };
  const std::vector<Pair> pairs = {{"g", primary.g, reflected.g}, {"f", primary.f, reflected.f},
                                   {"phi1", pa[0], pb[0]},        {"phi2", pa[1], pb[1]},
                                   {"phi3", pa[2], pb[2]}};
  for (const auto& pr : pairs) {
    const expr::Expr da = expr::differentiate(pr.a), db = expr::differentiate(pr.b);
    double value = 0.0, deriv = 0.0;
    for (const cplx p : pts) {
      try {
        value = std::max(value, rel_gap(pr.a.eval(p), pr.b.eval(p)));
        deriv = std::max(deriv, rel_gap(da.eval(p), db.eval(p)));
      } catch (const Error&) {
        value = deriv = inf;
      }
    }
    add(pr.name + "_value", value, 1e-7);
    add(pr.name + "_derivative", deriv, 1e-7);
  }

  if (in.locus) {
    double worst = 0.0;
    for (const cplx p : pts) {
      try {
        worst = std::max(worst, in.locus->distance(reflected.g.eval(p)));
      } catch (const Error&) {
        worst = inf;
      }
    }
    add("boundary_locus", worst, 1e-8 * (1.0 + (in.locus->is_circle() ? in.locus->radius() : 0.0)));
  }

  const double xtol = 10.0 * in.q.abs_tol;
  double containment = 0.0, continuity = 0.0;
  for (const cplx p : pts) {
    try {
      const LVector xa = evaluate_surface(primary, p, in.q);
      const LVector xb = evaluate_surface(reflected, p, in.q);
      continuity = std::max(continuity, euclidean_norm(xa - xb));
      if (in.plane)
        containment = std::max({containment, std::abs(in.plane->level(xa)), std::abs(in.plane->level(xb))});
    } catch (const Error&) {
      continuity = containment = inf;
    }
  }
  add("continuity", continuity, xtol);
  if (in.plane) {
    add("plane_containment", containment, xtol);
    double sym = 0.0;
    for (const cplx z : primary.domain.grid(5, 5, 0.1)) {
      if (!primary.domain.contains(z)) continue;
      try {
        const double ha = in.plane->level(evaluate_surface(primary, z, in.q));
        const double hb = in.plane->level(evaluate_surface(reflected, b.reflect(z), in.q));
        sym = std::max(sym, std::abs(ha + hb));
      } catch (const Error&) {
        sym = inf;
      }
    }
    add("reflection_symmetry", sym, xtol);
  }
  return rep;
}

ExtendedSurface assemble(const WeierstrassData& data, const ContactData& contact, const ReflectionBoundary& b,
                         const ExtendOptions& options) {
  validate(data);
  ExtendedSurface ext;
  ext.original = data;
  ext.boundary = b;
  ext.contact = contact;
  ext.datum = HarmonicDatum::for_normal(contact.plane.normal());
  const ReflectedPair pair = reflect_weierstrass(data.f, data.g, contact.fitted, ext.datum, b);

  ext.reflected.f = pair.f;
  ext.reflected.g = pair.g;
  ext.reflected.domain = data.domain.reflected(b);
  const cplx anchor = data.domain.boundary_samples(b, 3)[1];
  ext.reflected.z0 = anchor;
  ext.reflected.X0 = evaluate_surface(data, anchor, options.q);
  singular_check(ext.reflected, ext.datum, options.singular_grid);

  MatchingInputs in;
  in.plane = &ext.contact.plane;
  in.locus = &ext.contact.fitted;
  in.q = options.q;
  in.samples = options.matching_samples;
  ext.matching = match_pieces(ext.original, ext.reflected, b, in);
  return ext;
}

namespace {

void require_class(const ContactData& contact, CausalClass want, const char* op) {
  if (contact.plane_class != want)
    throw Error(std::string(op) + ": plane is " + std::string(to_string(contact.plane_class)) + ", expected " +
                std::string(to_string(want)));
}

}  // namespace

ExtendedSurface extend_spacelike(const WeierstrassData& data, const ContactData& contact,
                                 const ReflectionBoundary& b, const ExtendOptions& options) {
  require_class(contact, CausalClass::Spacelike, "extend_spacelike");
  return assemble(data, contact, b, options);
}

ExtendedSurface extend_timelike(const WeierstrassData& data, const ContactData& contact,
                                const ReflectionBoundary& b, const ExtendOptions& options) {
  require_class(contact, CausalClass::Timelike, "extend_timelike");
  return assemble(data, contact, b, options);
}

ExtendedSurface extend_lightlike(const WeierstrassData& data, const ContactData& contact,
                                 const ReflectionBoundary& b, const ExtendOptions& options) {
  require_class(contact, CausalClass::Lightlike, "extend_lightlike");
  ExtendedSurface ext = assemble(data, contact, b, options);
  if (!contact.conelike && std::abs(contact.lambda) <= 1e-9)
    ext.warnings.push_back("degenerate contact: lambda = 0 forces |g| -> 1 on the boundary, so the induced "
                           "metric degenerates along the contact curve; the line reflection was applied "
                           "without asserting spacelikeness there");
  return ext;
}

ExtendedSurface extend_across(const WeierstrassData& data, const Plane& plane, const ReflectionBoundary& b,
                              const ExtendOptions& options) {
  validate(data);
  const ContactData contact = measure_contact(data, plane, b, options.contact);
  switch (contact.plane_class) {
    case CausalClass::Spacelike: return extend_spacelike(data, contact, b, options);
    case CausalClass::Timelike: return extend_timelike(data, contact, b, options);
    case CausalClass::Lightlike: return extend_lightlike(data, contact, b, options);
  }
  throw Error("extend: unknown plane class");
}

ExtendedSurface extend(const WeierstrassData& data, const Plane& plane, const ExtendOptions& options) {
  return extend_across(data, plane, data.domain.default_boundary(), options);
}

ExtendedSurface extend_circular(const WeierstrassData& data, double rho, const Plane& plane,
                                const ExtendOptions& options) {
  if (plane_class_tol(plane, 1e-12) != CausalClass::Spacelike)
    throw Error("extend_circular: the plane must be spacelike");
  const ReflectionBoundary b = ReflectionBoundary::circle(rho);
  validate(data);
  const ContactData contact = measure_contact(data, plane, b, options.contact);
  return extend_spacelike(data, contact, b, options);
}

}  // namespace maxsurf
