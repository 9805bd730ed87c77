#include "maxsurf/verify.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>

#include "maxsurf/kernels.hpp"

namespace maxsurf {

using nlohmann::ordered_json;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string num(double x) {
  char buf[32];
  auto r = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 6);
  return std::string(buf, r.ptr);
}

ordered_json json_number(double x) {
  if (std::isfinite(x)) return x;
  if (std::isnan(x)) return "nan";
  return x > 0 ? "inf" : "-inf";
}

ordered_json json_cplx(cplx z) { return ordered_json::array({json_number(z.real()), json_number(z.imag())}); }
ordered_json json_vec(const LVector& v) {
  return ordered_json::array({json_number(v.x1), json_number(v.x2), json_number(v.x3)});
}

CheckRecord make(std::string name, int samples, double value, double tol, std::string note = {}) {
  CheckRecord r;
  r.name = std::move(name);
  r.samples = samples;
  r.value = value;
  r.tolerance = tol;
  r.pass = value <= tol;
  r.note = std::move(note);
  return r;
}

CheckRecord info(std::string name, int samples, double value, std::string note) {
  CheckRecord r;
  r.name = std::move(name);
  r.samples = samples;
  r.value = value;
  r.relation = "info";
  r.pass = true;
  r.informational = true;
  r.note = std::move(note);
  return r;
}

std::vector<cplx> interior_grid(const Domain& d, const GridSpec& gs) {
  std::vector<cplx> out;
  for (const cplx z : d.grid(gs.n1, gs.n2, gs.inset, true))
    if (d.contains(z)) out.push_back(z);
  return out;
}

// Grid points whose stencil of radius `margin` stays in the closed domain.
std::vector<cplx> pick_probes(const Domain& d, const std::vector<cplx>& pts, int count, double margin) {
  std::vector<cplx> ok;
  const double tol = 1e-12 * std::max(1.0, d.scale());
  for (const cplx z : pts) {
    bool good = d.puncture_distance(z) > 4.0 * margin;
    for (const cplx s : {cplx(margin, 0), cplx(-margin, 0), cplx(0, margin), cplx(0, -margin)})
      good = good && d.in_closure(z + s, tol);
    if (good) ok.push_back(z);
  }
  if (static_cast<int>(ok.size()) <= count || count < 2) {
    if (count < static_cast<int>(ok.size())) ok.resize(std::max(count, 0));
    return ok;
  }
  std::vector<cplx> out;
  for (int k = 0; k < count; ++k) out.push_back(ok[static_cast<std::size_t>(k) * (ok.size() - 1) / (count - 1)]);
  return out;
}

double boundary_distance(const Domain& d, cplx p) {
  const double r = std::abs(p);
  double dist = d.outer_radius() - r;
  if (d.inner_radius() > 0.0) dist = std::min(dist, r - d.inner_radius());
  if (d.half() != Half::Full) dist = std::min(dist, std::abs(p.imag()));
  return dist;
}

void data_checks(const WeierstrassData& d, const GridSpec& gs, const std::string& prefix,
                 std::vector<CheckRecord>& out) {
  const std::vector<cplx> pts = interior_grid(d.domain, gs);
  const int n = static_cast<int>(pts.size());
  const double scale = d.domain.scale();

  // Surface evaluation over the grid.
  const SurfaceView view(d);
  const auto samples = gs.parallel ? sample_surface_parallel(view, pts, gs.q) : sample_surface_serial(view, pts, gs.q);
  int failed = 0;
  double max_err = 0.0, min_conf = kInf;
  for (const auto& s : samples) {
    if (!s.ok) {
      ++failed;
      continue;
    }
    max_err = std::max(max_err, s.error);
    min_conf = std::min(min_conf, s.conformal);
  }
  out.push_back(make(prefix + "surface_evaluation", n, failed, 0.0,
                     "points that failed to evaluate; max quadrature error estimate " + num(max_err)));

  // Algebraic identity and metric positivity.
  const IdentityStats st = gs.parallel ? identity_stats_parallel(d, pts) : identity_stats_serial(d, pts);
  out.push_back(make(prefix + "identity_residual", n, st.failures ? kInf : st.max_relative_residual, 1e-12,
                     "max |phi1^2 + phi2^2 - phi3^2| / (|phi1|^2 + |phi2|^2 + |phi3|^2)"));
  {
    CheckRecord r = make(prefix + "metric_positive", n, st.min_metric, 0.0, "min |phi1|^2 + |phi2|^2 - |phi3|^2");
    r.relation = ">";
    r.pass = st.failures == 0 && st.min_metric > 0.0;
    out.push_back(r);
  }

  // Sheet, stereographic round trip, distance to the conelike locus.
  int upper = 0, lower = 0, stereo_n = 0;
  double stereo = 0.0, cone = kInf;
  for (const cplx z : pts) {
    cplx g;
    try {
      g = d.g.eval(z);
    } catch (const Error&) {
      continue;
    }
    (std::abs(g) < 1.0 ? upper : lower) += 1;
    cone = std::min(cone, std::abs(std::abs(g) - 1.0));
    try {
      const LVector N = gauss_map_of(g);
      stereo = std::max(stereo, std::abs(stereo_inverse_any_sheet(N) - g) / std::max(1.0, std::abs(g)));
      ++stereo_n;
    } catch (const Error&) {
      stereo = kInf;
    }
  }
  out.push_back(make(prefix + "gauss_sheet", n, std::min(upper, lower), 0.0,
                     std::string("points off the majority sheet; sheet ") + (upper >= lower ? "upper" : "lower")));
  out.push_back(make(prefix + "stereo_roundtrip", stereo_n, stereo, 1e-10, "max |pi^-1(N(g)) - g| / max(1, |g|)"));
  {
    std::string note = "min ||g| - 1| over the grid; min conformal factor " + num(min_conf);
    if (cone < 0.1) note += "; near the conelike locus |g| = 1, where the conformal factor vanishes";
    out.push_back(info(prefix + "conelike_proximity", n, cone, note));
  }

  // Path independence on homotopic paths.
  const double hmax = *std::max_element(gs.harmonic_steps.begin(), gs.harmonic_steps.end()) * scale;
  const std::vector<cplx> probes = pick_probes(d.domain, pts, gs.probes, hmax);
  {
    double gap = 0.0;
    int compared = 0;
    for (const cplx z : probes) {
      try {
        const SurfacePoint a = integrate_surface(d, z, gs.q);
        const double near = std::min(d.domain.puncture_distance(d.z0), d.domain.puncture_distance(z));
        const Path alt = alternative_path(d.domain, a.path, std::min(gs.q.clearance, 0.5 * near));
        if (alt.pieces.empty() || alt.describe() == a.path.describe()) continue;
        const SurfacePoint b = integrate_along(d, alt, gs.q);
        gap = std::max(gap, euclidean_norm(a.X - b.X));
        ++compared;
      } catch (const Error&) {
        gap = kInf;
      }
    }
    out.push_back(make(prefix + "path_independence", compared, gap, 10.0 * gs.q.abs_tol,
                       "max |X(path) - X(homotopic alternative)|"));
  }

  // Harmonicity.
  {
    std::vector<double> steps;
    for (const double s : gs.harmonic_steps) steps.push_back(s * scale);
    CheckRecord r;
    r.name = prefix + "harmonicity";
    r.samples = static_cast<int>(probes.size());
    r.relation = ">=";
    r.tolerance = 1.8;
    try {
      const HarmonicityResult h = harmonicity(d, probes, steps);
      r.value = h.order;
      r.pass = !probes.empty() && h.pass();
      r.note = "fitted order of the 5-point Laplacian residual; residuals";
      for (const double x : h.residuals) r.note += " " + num(x);
      if (h.rounding_level) r.note += " (rounding level: exact)";
    } catch (const Error& e) {
      r.value = kNaN;
      r.pass = false;
      r.note = e.what();
    }
    if (probes.empty()) r.note = "no interior probe points";
    out.push_back(r);
  }

  // Cross product direction.
  {
    double worst = 0.0, s = kNaN;
    for (const cplx z : probes) {
      try {
        const CrossProductResult c = cross_product_normal(d, z, gs.cross_step * scale);
        if (c.residual >= worst) {
          worst = c.residual;
          s = c.scale;
        }
      } catch (const Error&) {
        worst = kInf;
      }
    }
    out.push_back(make(prefix + "cross_product_normal", static_cast<int>(probes.size()), worst, 1e-6,
                       "relative residual against |f|^2(1-|g|^2)(2Re g, 2Im g, 1+|g|^2); fitted scale " + num(s)));
  }

  // Declared poles.
  const auto& punctures = d.domain.punctures();
  for (std::size_t i = 0; i < punctures.size(); ++i) {
    if (punctures[i].pole_order <= 0) continue;
    CheckRecord r = check_pole_zero(d, punctures[i]);
    r.name = prefix + "pole_zero:" + std::to_string(i);
    out.push_back(r);
  }
}

ordered_json subject_of(const WeierstrassData& d) {
  ordered_json s;
  s["f"] = expr::format(d.f);
  s["g"] = expr::format(d.g);
  s["domain"] = d.domain.describe();
  s["z0"] = json_cplx(d.z0);
  s["X0"] = json_vec(d.X0);
  try {
    s["sheet"] = std::string(to_string(sheet_of(d)));
  } catch (const Error&) {
    s["sheet"] = "undetermined";
  }
  return s;
}

DiagnosticsReport two_piece(const WeierstrassData& primary, const WeierstrassData& reflected,
                            const ReflectionBoundary& b, const MatchingReport& matching, const GridSpec& grid) {
  DiagnosticsReport rep;
  rep.subject["primary"] = subject_of(primary);
  rep.subject["reflected"] = subject_of(reflected);
  rep.subject["boundary"] = b.describe();
  data_checks(primary, grid, "primary.", rep.checks);
  data_checks(reflected, grid, "reflected.", rep.checks);
  for (const Gap& g : matching.gaps) {
    CheckRecord r = make("matching." + g.name, matching.samples, g.value, g.tolerance);
    r.pass = g.pass;
    rep.checks.push_back(r);
  }
  return rep;
}

}  // namespace

bool DiagnosticsReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& r) { return r.pass; });
}

ordered_json DiagnosticsReport::to_json() const {
  ordered_json j;
  j["schema"] = "maxsurf.report/1";
  j["pass"] = pass();
  j["subject"] = subject;
  ordered_json arr = ordered_json::array();
  for (const auto& c : checks) arr.push_back(maxsurf::to_json(c));
  j["checks"] = arr;
  j["notes"] = notes;
  return j;
}

DiagnosticsReport full_diagnostics(const WeierstrassData& data, const GridSpec& grid) {
  DiagnosticsReport rep;
  rep.subject = subject_of(data);
  data_checks(data, grid, "", rep.checks);
  return rep;
}

DiagnosticsReport full_diagnostics(const WeierstrassData& primary, const WeierstrassData& reflected,
                                   const ReflectionBoundary& b, const Plane* plane, const GridSpec& grid) {
  MatchingInputs in;
  in.plane = plane;
  in.q = grid.q;
  const MatchingReport m = match_pieces(primary, reflected, b, in);
  DiagnosticsReport rep = two_piece(primary, reflected, b, m, grid);
  if (plane) {
    rep.subject["plane"] = json_vec(plane->normal());
    rep.subject["plane"].push_back(plane->offset());
  }
  return rep;
}

DiagnosticsReport full_diagnostics(const ExtendedSurface& ext, const GridSpec& grid) {
  DiagnosticsReport rep = two_piece(ext.original, ext.reflected, ext.boundary, ext.matching, grid);
  rep.subject["datum"] = ext.datum.label;
  rep.subject["contact"] = to_json(ext.contact);
  const ContactData& c = ext.contact;
  if (c.conelike) {
    rep.checks.push_back(info("contact.angle_constancy", static_cast<int>(c.profile.points.size()), kNaN,
                              "conelike contact: no finite angle"));
  } else {
    rep.checks.push_back(make("contact.angle_constancy", static_cast<int>(c.profile.points.size()), c.deviation,
                              1e-6 * std::max(1.0, std::abs(c.c)), "max deviation of <N, n> from c = " + num(c.c)));
  }
  rep.checks.push_back(make("contact.locus_closed_form", static_cast<int>(c.profile.g.size()), c.discrepancy, 1e-6,
                            "max distance of boundary g to the closed-form locus"));
  const double r = c.fitted.is_circle() ? c.fitted.radius() : 0.0;
  rep.checks.push_back(make("contact.locus_fit", static_cast<int>(c.profile.g.size()), c.fitted.fit_residual,
                            1e-8 * (1.0 + r), "max distance of boundary g to the fitted locus"));
  rep.notes = c.notes;
  rep.notes.insert(rep.notes.end(), ext.warnings.begin(), ext.warnings.end());
  return rep;
}

LVector catenoid_reference(double u, double v) {
  return {std::sinh(u) * std::cos(v), std::sinh(u) * std::sin(v), u};
}

HarmonicityResult harmonicity(const WeierstrassData& data, const std::vector<cplx>& points,
                              const std::vector<double>& steps) {
  HarmonicityResult res;
  res.steps = steps;
  double phi_scale = 1.0;
  for (const cplx z : points) {
    const PhiTriple p = phi(data, z);
    phi_scale = std::max(phi_scale, std::abs(p.phi1) + std::abs(p.phi2) + std::abs(p.phi3));
  }
  const double floor = 1e-9 * phi_scale;
  for (const double h : steps) {
    double worst = 0.0;
    for (const cplx z : points) {
      const LVector L = discrete_laplacian(data, z, h);
      worst = std::max({worst, std::abs(L.x1), std::abs(L.x2), std::abs(L.x3)});
    }
    res.residuals.push_back(worst);
  }
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (res.residuals[i] > floor) {
      lx.push_back(std::log(steps[i]));
      ly.push_back(std::log(res.residuals[i]));
    }
  }
  if (lx.size() < 2) {
    res.rounding_level = true;
    res.order = kNaN;
    return res;
  }
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= static_cast<double>(lx.size());
  my /= static_cast<double>(lx.size());
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxy += (lx[i] - mx) * (ly[i] - my);
    sxx += (lx[i] - mx) * (lx[i] - mx);
  }
  res.order = sxy / sxx;
  return res;
}

CrossProductResult cross_product_normal(const WeierstrassData& data, cplx z, double h) {
  const LVector xu = (surface_increment(data, z, z + h) - surface_increment(data, z, z - h)) / (2.0 * h);
  const cplx ih(0.0, h);
  const LVector xv = (surface_increment(data, z, z + ih) - surface_increment(data, z, z - ih)) / (2.0 * h);
  const LVector cross = lorentz_cross(xu, xv);
  const cplx f = data.f.eval(z), g = data.g.eval(z);
  const double m = std::norm(g);
  const LVector w = LVector{2.0 * g.real(), 2.0 * g.imag(), 1.0 + m} * (std::norm(f) * (1.0 - m));
  const double ww = w.x1 * w.x1 + w.x2 * w.x2 + w.x3 * w.x3;
  CrossProductResult out;
  const double cn = euclidean_norm(cross);
  if (ww == 0.0 || cn == 0.0) {
    out.residual = cn == 0.0 && ww == 0.0 ? 0.0 : 1.0;
    return out;
  }
  out.scale = (cross.x1 * w.x1 + cross.x2 * w.x2 + cross.x3 * w.x3) / ww;
  out.residual = euclidean_norm(cross - w * out.scale) / cn;
  return out;
}

CheckRecord check_cross_product_normal(const WeierstrassData& data, cplx z, double h) {
  const CrossProductResult c = cross_product_normal(data, z, h);
  return make("cross_product_normal", 1, c.residual, 1e-6, "fitted scale " + num(c.scale));
}

double winding_order(const expr::Expr& e, cplx p, double radius, int m) {
  const expr::Expr de = expr::differentiate(e);
  cplx sum = 0.0;
  for (int j = 0; j < m; ++j) {
    const cplx dz = std::polar(radius, 2.0 * std::numbers::pi * j / m);
    cplx v, dv;
    try {
      v = e.eval(p + dz);
      dv = de.eval(p + dz);
    } catch (const Error&) {
      return kNaN;
    }
    if (v == cplx(0.0)) return kNaN;
    sum += dv / v * dz;
  }
  return (sum / static_cast<double>(m)).real();
}

CheckRecord check_pole_zero(const WeierstrassData& data, const Puncture& p) {
  const Domain& d = data.domain;
  double room = std::min(boundary_distance(d, p.at), 0.1 * d.scale());
  for (const auto& q : d.punctures())
    if (q.at != p.at) room = std::min(room, std::abs(q.at - p.at));
  const double radius = 0.5 * room;
  const double og = winding_order(data.g, p.at, radius);
  const double of = winding_order(data.f, p.at, radius);
  const int m = p.pole_order;
  const double value = std::abs(og + m) + std::abs(of - 2.0 * m);
  CheckRecord r = make("pole_zero", 128, std::isnan(value) ? kInf : value, 0.05);
  r.note = "g order " + num(og) + " (declared pole " + std::to_string(m) + "), f order " + num(of) +
           " (expected " + std::to_string(2 * m) + ")";
  return r;
}

CheckRecord ObstructionEntry::record() const {
  CheckRecord r = make("orthogonality_obstruction", 0, angle_limit, 0.0, message);
  r.relation = "class";
  r.pass = kind == Kind::None;
  return r;
}

ObstructionEntry classify_contact_profile(CausalClass plane_class, const LVector& n,
                                          const std::vector<double>& angle_limits,
                                          const std::vector<cplx>& g_limits, double tol) {
  ObstructionEntry e;
  e.angle_limit = 0.0;
  bool finite = !angle_limits.empty();
  for (const double a : angle_limits) {
    if (std::isnan(a)) finite = false;
    else e.angle_limit = std::max(e.angle_limit, std::abs(a));
  }
  if (plane_class == CausalClass::Lightlike) {
    const cplx w(n.x1 / n.x3, n.x2 / n.x3);
    e.g_gap = g_limits.empty() ? kInf : 0.0;
    for (const cplx g : g_limits) e.g_gap = std::max(e.g_gap, std::abs(g - w));
    if (e.g_gap < 1e-6) {
      e.kind = ObstructionEntry::Kind::Degenerate;
      e.message = "degenerate: X_u^X_v = 0 along the boundary (g -> " + num(w.real()) + " + " + num(w.imag()) +
                  "i, where <N, n> = 0 forces the metric to vanish)";
      return e;
    }
  }
  if (finite && e.angle_limit < tol) {
    if (plane_class == CausalClass::Spacelike) {
      e.kind = ObstructionEntry::Kind::ImpossibleContact;
      e.message = "impossible contact: a spacelike plane cannot meet a maximal surface orthogonally "
                  "(<N, n> = 0 would force 1 + |g|^2 = 0)";
    } else {
      e.kind = ObstructionEntry::Kind::OrthogonalOutOfScope;
      e.message = "orthogonal contact: symmetric-reflection case, out of scope";
    }
    return e;
  }
  e.message = "no obstruction";
  return e;
}

ObstructionEntry check_orthogonality_obstruction(const Plane& plane, const WeierstrassData& data,
                                                 const ReflectionBoundary& b, const ContactOptions& options) {
  const Plane p = normalized_plane(plane);
  const CausalClass cls = plane_class_tol(p, 1e-12);
  const ApproachProfile prof = approach_profile(data, p.normal(), b, options);
  return classify_contact_profile(cls, p.normal(), prof.angle, prof.g, options.orthogonal_tol);
}

ordered_json to_json(const CheckRecord& r) {
  ordered_json j;
  j["name"] = r.name;
  j["samples"] = r.samples;
  j["value"] = json_number(r.value);
  j["relation"] = r.relation;
  j["tolerance"] = json_number(r.tolerance);
  j["pass"] = r.pass;
  j["note"] = r.note;
  return j;
}

ordered_json to_json(const CircleOrLine& l) {
  ordered_json j;
  if (l.is_circle()) {
    j["kind"] = "circle";
    j["center"] = json_cplx(l.center());
    j["radius"] = json_number(l.radius());
  } else {
    j["kind"] = "line";
    j["point"] = json_cplx(l.point());
    j["direction"] = json_cplx(l.direction());
  }
  j["fit_residual"] = json_number(l.fit_residual);
  return j;
}

ordered_json to_json(const ContactData& c) {
  ordered_json j;
  ordered_json plane = json_vec(c.plane.normal());
  plane.push_back(json_number(c.plane.offset()));
  j["plane"] = plane;
  j["plane_class"] = std::string(to_string(c.plane_class));
  j["conelike"] = c.conelike;
  j["c"] = json_number(c.c);
  j["deviation"] = json_number(c.deviation);
  j["theta"] = json_number(c.theta);
  j["lambda"] = json_number(c.lambda);
  j["fitted_locus"] = to_json(c.fitted);
  j["closed_form_locus"] = to_json(c.closed);
  j["discrepancy"] = json_number(c.discrepancy);
  j["samples"] = c.profile.points.size();
  j["notes"] = c.notes;
  return j;
}

ordered_json to_json(const MatchingReport& m) {
  ordered_json j;
  j["pass"] = m.pass();
  j["samples"] = m.samples;
  ordered_json gaps = ordered_json::array();
  for (const Gap& g : m.gaps) {
    ordered_json e;
    e["name"] = g.name;
    e["value"] = json_number(g.value);
    e["tolerance"] = json_number(g.tolerance);
    e["pass"] = g.pass;
    gaps.push_back(e);
  }
  j["gaps"] = gaps;
  return j;
}

}  // namespace maxsurf
