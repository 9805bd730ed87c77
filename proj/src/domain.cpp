#include "maxsurf/domain.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

namespace maxsurf {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

std::string num(double x) {
  if (std::isinf(x)) return "inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

bool in_half(Half h, cplx z, double tol) {
  switch (h) {
    case Half::Full: return true;
    case Half::Upper: return z.imag() >= -tol;
    case Half::Lower: return z.imag() <= tol;
  }
  return false;
}

bool in_half_open(Half h, cplx z) {
  switch (h) {
    case Half::Full: return true;
    case Half::Upper: return z.imag() > 0.0;
    case Half::Lower: return z.imag() < 0.0;
  }
  return false;
}

Half flip(Half h) {
  switch (h) {
    case Half::Upper: return Half::Lower;
    case Half::Lower: return Half::Upper;
    case Half::Full: return Half::Full;
  }
  return h;
}

double segment_distance(cplx p, cplx a, cplx b) {
  const cplx d = b - a;
  const double len2 = std::norm(d);
  if (len2 == 0.0) return std::abs(p - a);
  double t = ((p - a) * std::conj(d)).real() / len2;
  t = std::clamp(t, 0.0, 1.0);
  return std::abs(p - (a + t * d));
}

// Whether angle phi (mod 2 pi) lies between theta0 and theta1.
bool angle_in_span(double phi, double theta0, double theta1) {
  const double lo = std::min(theta0, theta1), hi = std::max(theta0, theta1);
  double k = std::floor((lo - phi) / (2 * kPi));
  for (int s = 0; s < 3; ++s) {
    const double cand = phi + (k + s) * 2 * kPi;
    if (cand >= lo && cand <= hi) return true;
  }
  return false;
}

double arc_distance(cplx p, const ArcPiece& arc) {
  const double r = std::abs(p);
  if (r > 0.0 && angle_in_span(std::arg(p), arc.theta0, arc.theta1)) return std::abs(r - arc.radius);
  const cplx e0 = std::polar(arc.radius, arc.theta0), e1 = std::polar(arc.radius, arc.theta1);
  double d = std::min(std::abs(p - e0), std::abs(p - e1));
  if (r == 0.0) d = arc.radius;
  return d;
}

}  // namespace

// ---------------------------------------------------------------------------
// ReflectionBoundary

ReflectionBoundary ReflectionBoundary::circle(double rho) {
  if (!(rho > 0.0) || !std::isfinite(rho)) throw Error("reflection circle radius must be positive");
  return ReflectionBoundary(rho);
}

cplx ReflectionBoundary::reflect(cplx z) const {
  if (!is_circle()) return std::conj(z);
  return rho_ * rho_ / std::conj(z);
}

expr::Expr ReflectionBoundary::inner_map() const {
  if (!is_circle()) return expr::variable();
  return expr::constant(rho_ * rho_) / expr::variable();
}

expr::Expr ReflectionBoundary::inner_map_derivative() const {
  if (!is_circle()) return expr::constant(1.0);
  return expr::constant(-rho_ * rho_) / expr::power(expr::variable(), 2);
}

double ReflectionBoundary::side(cplx z) const {
  if (!is_circle()) return z.imag();
  return rho_ - std::abs(z);
}

cplx ReflectionBoundary::project(cplx z) const {
  if (!is_circle()) return {z.real(), 0.0};
  const double r = std::abs(z);
  if (r == 0.0) return {rho_, 0.0};
  return z * (rho_ / r);
}

std::string ReflectionBoundary::describe() const {
  if (!is_circle()) return "real-axis";
  return "circle " + num(rho_);
}

ReflectionBoundary ReflectionBoundary::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string kind;
  in >> kind;
  if (kind == "real-axis") return real_axis();
  if (kind == "circle") {
    double rho = 0.0;
    if (!(in >> rho)) throw Error("boundary: expected `circle <radius>`");
    return circle(rho);
  }
  throw Error("boundary: expected `real-axis` or `circle <radius>`");
}

// ---------------------------------------------------------------------------
// Domain

Domain Domain::disk(double radius) {
  if (!(radius > 0.0)) throw Error("domain: disk radius must be positive");
  return Domain(0.0, radius, Half::Full, true);
}

Domain Domain::half_disk(double radius, Half half) {
  if (!(radius > 0.0)) throw Error("domain: half-disk radius must be positive");
  if (half == Half::Full) throw Error("domain: half-disk needs a half");
  return Domain(0.0, radius, half, true);
}

Domain Domain::annulus(double r_in, double r_out) {
  if (!(r_in >= 0.0 && r_out > r_in)) throw Error("domain: annulus needs 0 <= r_in < r_out");
  Domain d(r_in, r_out, Half::Full, false);
  if (r_in == 0.0) d.punctures_.push_back({0.0, 0});
  return d;
}

Domain Domain::half_annulus(double r_in, double r_out, Half half) {
  if (!(r_in > 0.0 && r_out > r_in)) throw Error("domain: half-annulus needs 0 < r_in < r_out");
  if (half == Half::Full) throw Error("domain: half-annulus needs a half");
  return Domain(r_in, r_out, half, false);
}

Domain Domain::punctured_disk(double radius) {
  if (!(radius > 0.0)) throw Error("domain: punctured-disk radius must be positive");
  Domain d(0.0, radius, Half::Full, false);
  d.punctures_.push_back({0.0, 0});
  return d;
}

Domain Domain::exterior(double radius) {
  if (!(radius > 0.0)) throw Error("domain: exterior radius must be positive");
  return Domain(radius, kInf, Half::Full, false);
}

Domain Domain::with_puncture(Puncture p) const {
  const bool on_center = p.at == cplx(0.0) && !center_ && r_in_ == 0.0;
  if (!in_region(p.at) && !on_center) throw Error("domain: puncture lies outside the domain");
  Domain d = *this;
  for (auto& q : d.punctures_) {
    if (q.at == p.at) {
      q.pole_order = p.pole_order;
      return d;
    }
  }
  d.punctures_.push_back(p);
  return d;
}

bool Domain::in_region(cplx z) const {
  const double r = std::abs(z);
  if (!(r < r_out_)) return false;
  if (center_) {
    if (r_in_ > 0.0 && !(r > r_in_)) return false;
  } else if (!(r > r_in_)) {
    return false;
  }
  return in_half_open(half_, z);
}

bool Domain::in_closure(cplx z, double tol) const {
  const double r = std::abs(z);
  if (r > r_out_ + tol) return false;
  if (r < r_in_ - tol) return false;
  return in_half(half_, z, tol);
}

bool Domain::contains(cplx z) const {
  if (!in_region(z)) return false;
  for (const auto& p : punctures_)
    if (std::abs(z - p.at) <= 1e-14 * scale()) return false;
  return true;
}

double Domain::puncture_distance(cplx z) const {
  double d = kInf;
  for (const auto& p : punctures_) d = std::min(d, std::abs(z - p.at));
  return d;
}

double Domain::sampling_inner_radius() const {
  if (!std::isnan(hint_in_)) return hint_in_;
  if (r_in_ > 0.0 || center_) return r_in_;
  return 0.01 * r_out_;
}

double Domain::sampling_outer_radius() const {
  if (!std::isnan(hint_out_)) return hint_out_;
  if (std::isfinite(r_out_)) return r_out_;
  return 4.0 * r_in_;
}

double Domain::scale() const { return sampling_outer_radius(); }

std::vector<cplx> Domain::grid(int n1, int n2, double inset, bool closed_angle) const {
  if (n1 < 1 || n2 < 1) throw Error("grid: dimensions must be positive");
  auto lin = [](double lo, double hi, int n, int k) {
    if (n == 1) return 0.5 * (lo + hi);
    return lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(n - 1);
  };
  std::vector<cplx> out;
  out.reserve(static_cast<std::size_t>(n1) * static_cast<std::size_t>(n2));
  if (!polar_sampling()) {
    const double a = r_out_ / std::sqrt(2.0);
    double x0 = -a, x1 = a, y0 = -a, y1 = a;
    if (half_ == Half::Upper) y0 = 0.0;
    if (half_ == Half::Lower) y1 = 0.0;
    const double dx = (x1 - x0) * inset, dy = (y1 - y0) * inset;
    for (int i = 0; i < n1; ++i)
      for (int j = 0; j < n2; ++j) out.emplace_back(lin(x0 + dx, x1 - dx, n1, i), lin(y0 + dy, y1 - dy, n2, j));
    return out;
  }
  const double r0 = sampling_inner_radius(), r1 = sampling_outer_radius();
  const double dr = (r1 - r0) * inset;
  double t0 = -kPi, t1 = kPi;
  if (half_ == Half::Upper) t0 = 0.0;
  if (half_ == Half::Lower) {
    t0 = -kPi;
    t1 = 0.0;
  }
  double dt = 0.0;
  if (half_ != Half::Full) dt = (t1 - t0) * inset;
  for (int i = 0; i < n1; ++i) {
    const double r = lin(r0 + dr, r1 - dr, n1, i);
    for (int j = 0; j < n2; ++j) {
      double t;
      if (half_ == Half::Full && !closed_angle)
        t = n2 == 1 ? 0.0 : t0 + (t1 - t0) * static_cast<double>(j) / static_cast<double>(n2);
      else
        t = lin(t0 + dt, t1 - dt, n2, j);
      out.push_back(std::polar(r, t));
    }
  }
  return out;
}

bool Domain::has_default_boundary() const { return half_ != Half::Full || !center_; }

ReflectionBoundary Domain::default_boundary() const {
  if (half_ != Half::Full) return ReflectionBoundary::real_axis();
  if (!center_ && std::isfinite(r_out_)) return ReflectionBoundary::circle(r_out_);
  if (!center_ && r_in_ > 0.0) return ReflectionBoundary::circle(r_in_);
  throw Error("domain: no natural reflection boundary for " + describe());
}

bool Domain::on_positive_side(const ReflectionBoundary& b) const {
  if (!b.is_circle()) {
    if (half_ == Half::Upper) return true;
    if (half_ == Half::Lower) return false;
    throw Error("domain: the real axis does not bound " + describe());
  }
  const double rho = b.radius();
  const double tol = 1e-12 * std::max(1.0, rho);
  if (std::abs(r_out_ - rho) <= tol) return true;
  if (std::abs(r_in_ - rho) <= tol && r_in_ > 0.0) return false;
  throw Error("domain: circle of radius " + num(rho) + " does not bound " + describe());
}

Domain Domain::reflected(const ReflectionBoundary& b) const {
  const bool inside = on_positive_side(b);
  Domain d = *this;
  if (!b.is_circle()) {
    d.half_ = flip(half_);
  } else {
    const double rho2 = b.radius() * b.radius();
    if (inside) {
      d.r_in_ = b.radius();
      d.r_out_ = r_in_ > 0.0 ? rho2 / r_in_ : kInf;
      d.hint_in_ = b.radius();
      d.hint_out_ = rho2 / sampling_inner_radius();
    } else {
      d.r_out_ = b.radius();
      d.r_in_ = std::isfinite(r_out_) ? rho2 / r_out_ : 0.0;
      d.hint_in_ = rho2 / sampling_outer_radius();
      d.hint_out_ = b.radius();
    }
    d.center_ = false;
  }
  d.punctures_.clear();
  for (const auto& p : punctures_) {
    if (b.is_circle() && p.at == cplx(0.0)) continue;
    d.punctures_.push_back({b.reflect(p.at), 0});
  }
  if (b.is_circle() && d.r_in_ == 0.0) d.punctures_.push_back({0.0, 0});
  return d;
}

Domain Domain::merged(const ReflectionBoundary& b) const {
  const Domain other = reflected(b);
  Domain d = *this;
  if (!b.is_circle()) {
    d.half_ = Half::Full;
  } else {
    d.r_in_ = std::min(r_in_, other.r_in_);
    d.r_out_ = std::max(r_out_, other.r_out_);
    d.hint_in_ = std::min(sampling_inner_radius(), other.sampling_inner_radius());
    d.hint_out_ = std::max(sampling_outer_radius(), other.sampling_outer_radius());
    d.center_ = center_ && on_positive_side(b);
  }
  d.punctures_ = punctures_;
  for (const auto& p : other.punctures_) {
    const bool dup = std::any_of(d.punctures_.begin(), d.punctures_.end(),
                                 [&](const Puncture& q) { return q.at == p.at; });
    if (!dup) d.punctures_.push_back(p);
  }
  return d;
}

std::vector<cplx> Domain::boundary_samples(const ReflectionBoundary& b, int count) const {
  if (count < 2) throw Error("boundary samples: need at least two");
  std::vector<cplx> out;
  auto frac = [count](int j) { return 0.05 + 0.9 * static_cast<double>(j) / static_cast<double>(count - 1); };
  if (!b.is_circle()) {
    if (half_ == Half::Full) throw Error("domain: the real axis does not bound " + describe());
    if (center_) {
      const double R = r_out_;
      for (int j = 0; j < count; ++j) out.emplace_back(-R + 2.0 * R * frac(j), 0.0);
    } else {
      const double lo = r_in_, hi = sampling_outer_radius();
      const int right = count / 2, left = count - right;
      auto f = [](int j, int n) { return n == 1 ? 0.5 : 0.05 + 0.9 * static_cast<double>(j) / (n - 1); };
      for (int j = 0; j < left; ++j) out.emplace_back(-hi + (hi - lo) * f(j, left), 0.0);
      for (int j = 0; j < right; ++j) out.emplace_back(lo + (hi - lo) * f(j, right), 0.0);
    }
    return out;
  }
  const double rho = b.radius();
  for (int j = 0; j < count; ++j) {
    double t = 0.0;
    switch (half_) {
      case Half::Full: t = -kPi + 2.0 * kPi * (j + 0.5) / count; break;
      case Half::Upper: t = kPi * frac(j); break;
      case Half::Lower: t = -kPi * frac(j); break;
    }
    out.push_back(std::polar(rho, t));
  }
  return out;
}

std::string Domain::describe() const {
  const std::string prefix = half_ == Half::Upper ? "upper-half-" : half_ == Half::Lower ? "lower-half-" : "";
  if (center_) return prefix + "disk " + num(r_out_);
  if (half_ == Half::Full) {
    if (r_in_ == 0.0 && std::isfinite(r_out_)) return "punctured-disk " + num(r_out_);
    if (std::isinf(r_out_) && r_in_ > 0.0) return "exterior " + num(r_in_);
  }
  return prefix + "annulus " + num(r_in_) + " " + num(r_out_);
}

Domain Domain::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string kind;
  in >> kind;
  auto read = [&in, &kind]() {
    std::string tok;
    if (!(in >> tok)) throw Error("domain: `" + kind + "` is missing a radius");
    if (tok == "inf") return kInf;
    double v = 0.0;
    const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (res.ec != std::errc() || res.ptr != tok.data() + tok.size()) throw Error("domain: bad number `" + tok + "`");
    return v;
  };
  Domain d = [&]() -> Domain {
    if (kind == "disk") return disk(read());
    if (kind == "upper-half-disk") return half_disk(read(), Half::Upper);
    if (kind == "lower-half-disk") return half_disk(read(), Half::Lower);
    if (kind == "punctured-disk") return punctured_disk(read());
    if (kind == "exterior") return exterior(read());
    if (kind == "annulus") {
      const double a = read();
      return annulus(a, read());
    }
    if (kind == "upper-half-annulus" || kind == "half-annulus") {
      const double a = read();
      return half_annulus(a, read(), Half::Upper);
    }
    if (kind == "lower-half-annulus") {
      const double a = read();
      return half_annulus(a, read(), Half::Lower);
    }
    throw Error("domain: unknown kind `" + kind + "`");
  }();
  std::string extra;
  if (in >> extra) throw Error("domain: unexpected trailing `" + extra + "`");
  return d;
}

// ---------------------------------------------------------------------------
// Paths

cplx piece_point(const PathPiece& p, double t) {
  if (const auto* l = std::get_if<LinePiece>(&p)) return l->a + t * (l->b - l->a);
  const auto& a = std::get<ArcPiece>(p);
  return std::polar(a.radius, t);
}

cplx piece_velocity(const PathPiece& p, double t) {
  if (const auto* l = std::get_if<LinePiece>(&p)) return l->b - l->a;
  const auto& a = std::get<ArcPiece>(p);
  return cplx(0.0, 1.0) * std::polar(a.radius, t);
}

std::pair<double, double> piece_interval(const PathPiece& p) {
  if (std::holds_alternative<LinePiece>(p)) return {0.0, 1.0};
  const auto& a = std::get<ArcPiece>(p);
  return {a.theta0, a.theta1};
}

cplx Path::start() const {
  if (pieces.empty()) return {};
  return piece_point(pieces.front(), piece_interval(pieces.front()).first);
}

cplx Path::end() const {
  if (pieces.empty()) return {};
  return piece_point(pieces.back(), piece_interval(pieces.back()).second);
}

std::string Path::describe() const {
  std::ostringstream os;
  os.precision(17);
  bool first = true;
  for (const auto& p : pieces) {
    if (!first) os << "; ";
    first = false;
    if (const auto* l = std::get_if<LinePiece>(&p))
      os << "line (" << l->a.real() << "," << l->a.imag() << ") -> (" << l->b.real() << "," << l->b.imag() << ")";
    else {
      const auto& a = std::get<ArcPiece>(p);
      os << "arc r=" << a.radius << " theta " << a.theta0 << " -> " << a.theta1;
    }
  }
  if (first) os << "empty";
  return os.str();
}

bool path_admissible(const Domain& d, const Path& path, double clearance) {
  const double tol = 1e-12 * std::max(1.0, d.scale());
  for (const auto& piece : path.pieces) {
    if (const auto* l = std::get_if<LinePiece>(&piece)) {
      if (!d.in_closure(l->a, tol) || !d.in_closure(l->b, tol)) return false;
      // The closure is a ring intersected with a half-plane; the half-plane is
      // convex, so only the inner radius can be violated mid-segment.
      if (segment_distance(0.0, l->a, l->b) < d.inner_radius() - tol) return false;
      for (const auto& p : d.punctures()) {
        if (segment_distance(p.at, l->a, l->b) < clearance) return false;
      }
    } else {
      const auto& a = std::get<ArcPiece>(piece);
      if (a.radius > d.outer_radius() + tol || a.radius < d.inner_radius() - tol) return false;
      if (d.half() != Half::Full) {
        const double lo = d.half() == Half::Upper ? 0.0 : -kPi;
        const double hi = d.half() == Half::Upper ? kPi : 0.0;
        const double a0 = std::min(a.theta0, a.theta1), a1 = std::max(a.theta0, a.theta1);
        if (a0 < lo - 1e-12 || a1 > hi + 1e-12) return false;
      }
      for (const auto& p : d.punctures()) {
        if (arc_distance(p.at, a) < clearance) return false;
      }
    }
  }
  return true;
}

namespace {

std::vector<Path> polar_candidates(const Domain& d, cplx from, cplx to) {
  std::vector<Path> out;
  if (from == cplx(0.0) || to == cplx(0.0)) return out;
  const double ra = std::abs(from), rb = std::abs(to);
  const double ta = std::arg(from), tb = std::arg(to);
  double delta = tb - ta;
  if (d.half() == Half::Full) delta = std::remainder(delta, 2.0 * kPi);
  const double tol = 1e-15 * std::max(ra, rb);
  // radial at the start angle, then the arc at the target radius
  {
    Path p;
    if (std::abs(ra - rb) > tol) p.pieces.emplace_back(LinePiece{from, std::polar(rb, ta)});
    if (std::abs(delta) > 1e-15) p.pieces.emplace_back(ArcPiece{rb, ta, ta + delta});
    out.push_back(p);
  }
  // the arc at the start radius, then radial
  {
    Path p;
    if (std::abs(delta) > 1e-15) p.pieces.emplace_back(ArcPiece{ra, ta, ta + delta});
    if (std::abs(ra - rb) > tol) p.pieces.emplace_back(LinePiece{std::polar(ra, tb), to});
    out.push_back(p);
  }
  return out;
}

std::vector<Path> detour_candidates(const Domain& d, cplx from, cplx to, double clearance) {
  std::vector<Path> out;
  const cplx dir = to - from;
  if (std::abs(dir) == 0.0) return out;
  const cplx perp = cplx(0.0, 1.0) * dir / std::abs(dir);
  for (const auto& p : d.punctures()) {
    if (segment_distance(p.at, from, to) >= clearance) continue;
    for (double k : {3.0, 10.0, 30.0}) {
      for (double s : {1.0, -1.0}) {
        const cplx w = p.at + s * k * clearance * perp;
        Path path;
        path.pieces.emplace_back(LinePiece{from, w});
        path.pieces.emplace_back(LinePiece{w, to});
        out.push_back(path);
      }
    }
  }
  return out;
}

bool same_path(const Path& a, const Path& b) {
  if (a.pieces.size() != b.pieces.size()) return false;
  for (std::size_t i = 0; i < a.pieces.size(); ++i) {
    if (a.pieces[i].index() != b.pieces[i].index()) return false;
    if (const auto* la = std::get_if<LinePiece>(&a.pieces[i])) {
      const auto& lb = std::get<LinePiece>(b.pieces[i]);
      if (la->a != lb.a || la->b != lb.b) return false;
    } else {
      const auto& aa = std::get<ArcPiece>(a.pieces[i]);
      const auto& ab = std::get<ArcPiece>(b.pieces[i]);
      if (aa.radius != ab.radius || aa.theta0 != ab.theta0 || aa.theta1 != ab.theta1) return false;
    }
  }
  return true;
}

// Winding number about p of the loop `a` followed by `b` reversed.
double loop_winding(const Path& a, const Path& b, cplx p) {
  std::vector<cplx> pts;
  auto trace = [&pts](const Path& path, bool reverse) {
    std::vector<cplx> local;
    for (const auto& piece : path.pieces) {
      const auto [t0, t1] = piece_interval(piece);
      for (int k = 0; k <= 64; ++k) local.push_back(piece_point(piece, t0 + (t1 - t0) * k / 64.0));
    }
    if (reverse) std::reverse(local.begin(), local.end());
    pts.insert(pts.end(), local.begin(), local.end());
  };
  trace(a, false);
  trace(b, true);
  double total = 0.0;
  for (std::size_t k = 0; k + 1 < pts.size(); ++k) total += std::arg((pts[k + 1] - p) / (pts[k] - p));
  return total / (2.0 * kPi);
}

bool homotopic(const Domain& d, const Path& a, const Path& b) {
  std::vector<cplx> holes;
  for (const auto& p : d.punctures()) holes.push_back(p.at);
  if (!d.center_included() && d.half() == Half::Full) holes.push_back(0.0);
  for (const cplx h : holes)
    if (std::abs(loop_winding(a, b, h)) > 0.5) return false;
  return true;
}

}  // namespace

Path build_path(const Domain& d, cplx from, cplx to, PathPolicy policy, double clearance) {
  Path straight;
  if (from != to) straight.pieces.emplace_back(LinePiece{from, to});
  if (policy != PathPolicy::Polar && path_admissible(d, straight, clearance)) return straight;
  if (policy == PathPolicy::Straight)
    throw DomainError("no admissible straight path from (" + std::to_string(from.real()) + "," +
                      std::to_string(from.imag()) + ") to (" + std::to_string(to.real()) + "," +
                      std::to_string(to.imag()) + ")");
  if (d.polar_sampling() || policy == PathPolicy::Polar) {
    for (const auto& p : polar_candidates(d, from, to))
      if (path_admissible(d, p, clearance)) return p;
  }
  if (policy == PathPolicy::Auto) {
    for (const auto& p : detour_candidates(d, from, to, clearance))
      if (path_admissible(d, p, clearance)) return p;
  }
  throw DomainError("no admissible integration path from (" + std::to_string(from.real()) + "," +
                    std::to_string(from.imag()) + ") to (" + std::to_string(to.real()) + "," +
                    std::to_string(to.imag()) + ") in " + d.describe());
}

Path alternative_path(const Domain& d, const Path& primary, double clearance) {
  if (primary.pieces.empty()) return primary;
  const cplx from = primary.start(), to = primary.end();
  std::vector<Path> candidates = polar_candidates(d, from, to);
  const cplx dir = to - from;
  if (std::abs(dir) > 0.0) {
    const cplx mid = 0.5 * (from + to);
    const cplx perp = cplx(0.0, 1.0) * dir;
    for (double k : {0.25, -0.25, 0.1, -0.1, 0.03, -0.03}) {
      Path p;
      p.pieces.emplace_back(LinePiece{from, mid + k * perp});
      p.pieces.emplace_back(LinePiece{mid + k * perp, to});
      candidates.push_back(p);
    }
  }
  for (const auto& p : candidates)
    if (!p.pieces.empty() && !same_path(p, primary) && path_admissible(d, p, clearance) &&
        homotopic(d, primary, p))
      return p;
  return primary;
}

}  // namespace maxsurf
