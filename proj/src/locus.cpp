#include "maxsurf/locus.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <charconv>
#include <cmath>

namespace maxsurf {

namespace {

std::string num(double x) {
  char buf[32];
  auto r = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, r.ptr);
}

std::string num(cplx z) { return "(" + num(z.real()) + ", " + num(z.imag()) + ")"; }

CircleOrLine fit_line(const std::vector<cplx>& pts) {
  cplx mean = 0.0;
  for (const cplx p : pts) mean += p;
  mean /= static_cast<double>(pts.size());
  Eigen::Matrix2d cov = Eigen::Matrix2d::Zero();
  for (const cplx p : pts) {
    const Eigen::Vector2d d(p.real() - mean.real(), p.imag() - mean.imag());
    cov += d * d.transpose();
  }
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(cov);
  const Eigen::Vector2d v = es.eigenvectors().col(1);
  return CircleOrLine::line(mean, cplx(v(0), v(1)));
}

// Gauss-Newton on sum (|w_i - c| - r)^2.
void refine_circle(const std::vector<cplx>& pts, cplx& c, double& r) {
  const int n = static_cast<int>(pts.size());
  for (int it = 0; it < 20; ++it) {
    Eigen::MatrixXd J(n, 3);
    Eigen::VectorXd res(n);
    for (int i = 0; i < n; ++i) {
      const cplx d = pts[i] - c;
      const double a = std::abs(d);
      if (a == 0.0) return;
      J(i, 0) = -d.real() / a;
      J(i, 1) = -d.imag() / a;
      J(i, 2) = -1.0;
      res(i) = a - r;
    }
    const Eigen::Vector3d step = J.colPivHouseholderQr().solve(-res);
    c += cplx(step(0), step(1));
    r += step(2);
    if (step.norm() <= 1e-16 * (std::abs(c) + r)) break;
  }
}

}  // namespace

CircleOrLine CircleOrLine::circle(cplx center, double radius) {
  if (!(radius > 0.0) || !std::isfinite(radius)) throw Error("circle radius must be positive and finite");
  return CircleOrLine(true, center, radius, 0.0);
}

CircleOrLine CircleOrLine::line(cplx point, cplx direction) {
  const double m = std::abs(direction);
  if (!(m > 0.0)) throw Error("line direction must be nonzero");
  return CircleOrLine(false, point, 0.0, direction / m);
}

cplx CircleOrLine::reflect(cplx w) const {
  if (circle_) return a_ + r_ * r_ / std::conj(w - a_);
  return a_ + dir_ * dir_ * std::conj(w - a_);
}

double CircleOrLine::distance(cplx w) const {
  if (circle_) return std::abs(std::abs(w - a_) - r_);
  return std::abs(((w - a_) * std::conj(dir_)).imag());
}

expr::Expr CircleOrLine::reflect_conjugated(const expr::Expr& s) const {
  using namespace expr;
  if (circle_) {
    const Expr inv = constant(r_ * r_) / (a_ == cplx(0.0) ? s : s - constant(std::conj(a_)));
    return a_ == cplx(0.0) ? inv : constant(a_) + inv;
  }
  const Expr shifted = a_ == cplx(0.0) ? s : s - constant(std::conj(a_));
  const Expr turned = constant(dir_ * dir_) * shifted;
  return a_ == cplx(0.0) ? turned : constant(a_) + turned;
}

std::string CircleOrLine::describe() const {
  if (circle_) return "circle center " + num(a_) + " radius " + num(r_);
  return "line through " + num(a_) + " direction " + num(dir_);
}

CircleOrLine fit_circle_or_line(const std::vector<cplx>& points, double line_curvature) {
  std::vector<cplx> pts = points;
  std::sort(pts.begin(), pts.end(), [](cplx a, cplx b) { return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag(); });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) throw ContactError(ContactError::Kind::InsufficientSamples, "locus fit needs three distinct points");

  // Normalize for conditioning.
  cplx mean = 0.0;
  for (const cplx p : pts) mean += p;
  mean /= static_cast<double>(pts.size());
  double s = 0.0;
  for (const cplx p : pts) s += std::norm(p - mean);
  s = std::sqrt(s / static_cast<double>(pts.size()));
  if (!(s > 0.0)) throw ContactError(ContactError::Kind::InsufficientSamples, "locus fit: points coincide");

  const int n = static_cast<int>(pts.size());
  Eigen::MatrixXd M(n, 4);
  for (int i = 0; i < n; ++i) {
    const cplx q = (pts[i] - mean) / s;
    M(i, 0) = std::norm(q);
    M(i, 1) = q.real();
    M(i, 2) = q.imag();
    M(i, 3) = 1.0;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(M, Eigen::ComputeFullV);
  const Eigen::Vector4d a = svd.matrixV().col(3);
  const double A = a(0), D = a(1), E = a(2), F = a(3);

  CircleOrLine out = fit_line(pts);
  if (std::abs(A) > 1e-14 * std::hypot(D, E)) {
    const cplx cq(-D / (2.0 * A), -E / (2.0 * A));
    const double r2 = std::norm(cq) - F / A;
    if (r2 > 0.0) {
      cplx c = mean + s * cq;
      double r = s * std::sqrt(r2);
      if (1.0 / r >= line_curvature) {
        refine_circle(pts, c, r);
        if (std::isfinite(r) && r > 0.0 && 1.0 / r >= line_curvature) out = CircleOrLine::circle(c, r);
      }
    }
  }
  double worst = 0.0;
  for (const cplx p : pts) worst = std::max(worst, out.distance(p));
  out.fit_residual = worst;
  return out;
}

CircleOrLine contact_locus(const LVector& n, double c) {
  const double a = c - n.x3;
  const double scale = std::max({1.0, std::abs(c), std::abs(n.x1), std::abs(n.x2), std::abs(n.x3)});
  const cplx m(n.x1, n.x2);
  if (std::abs(a) <= 1e-9 * scale) {
    if (std::abs(m) == 0.0)
      throw ContactError(ContactError::Kind::GeometryMismatch, "contact locus is degenerate for this normal and c");
    // 2 n1 x + 2 n2 y = n3 + c
    const cplx foot = (n.x3 + c) / (2.0 * std::norm(m)) * m;
    return CircleOrLine::line(foot, cplx(0.0, 1.0) * m);
  }
  const cplx center = -m / a;
  const double r2 = std::norm(center) + (n.x3 + c) / a;
  if (!(r2 > 0.0))
    throw ContactError(ContactError::Kind::GeometryMismatch,
                       "no g value has <N, n> = " + num(c) + " for this normal (empty locus)");
  return CircleOrLine::circle(center, std::sqrt(r2));
}

}  // namespace maxsurf
