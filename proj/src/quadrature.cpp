#include "maxsurf/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace maxsurf {

namespace {

// Kronrod 15-point abscissae (descending, last is the centre) and weights;
// Gauss 7-point weights for the even-indexed abscissae xgk[1], xgk[3], xgk[5], xgk[7].
constexpr double xgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double wgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double wg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                          0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Interval {
  std::size_t piece;
  double t0, t1;
  Vec3c value;
  double error;
  double magnitude;
};

struct WorseFirst {
  bool operator()(const Interval& a, const Interval& b) const {
    if (a.error != b.error) return a.error < b.error;
    if (a.piece != b.piece) return a.piece > b.piece;
    return a.t0 > b.t0;
  }
};

Interval gauss_kronrod(const PathPiece& piece, std::size_t index, double t0, double t1,
                       const std::function<Vec3c(cplx)>& f) {
  const double centre = 0.5 * (t0 + t1);
  const double half = 0.5 * (t1 - t0);
  auto sample = [&](double t) {
    Vec3c v = f(piece_point(piece, t));
    const cplx dz = piece_velocity(piece, t);
    for (auto& c : v) c *= dz;
    return v;
  };
  Vec3c kronrod{}, gauss{};
  double magnitude = 0.0;
  const Vec3c fc = sample(centre);
  for (int k = 0; k < 3; ++k) {
    kronrod[k] = wgk[7] * fc[k];
    gauss[k] = wg[3] * fc[k];
    magnitude += wgk[7] * std::abs(fc[k]);
  }
  for (int j = 0; j < 7; ++j) {
    const double dx = half * xgk[j];
    const Vec3c a = sample(centre - dx);
    const Vec3c b = sample(centre + dx);
    for (int k = 0; k < 3; ++k) {
      const cplx s = a[k] + b[k];
      kronrod[k] += wgk[j] * s;
      if (j % 2 == 1) gauss[k] += wg[j / 2] * s;
      magnitude += wgk[j] * (std::abs(a[k]) + std::abs(b[k]));
    }
  }
  Interval out{index, t0, t1, {}, 0.0, std::abs(half) * magnitude};
  for (int k = 0; k < 3; ++k) {
    out.value[k] = kronrod[k] * half;
    out.error = std::max(out.error, std::abs((kronrod[k] - gauss[k]) * half));
  }
  if (!std::isfinite(out.error)) out.error = std::numeric_limits<double>::infinity();
  return out;
}

}  // namespace

PathIntegral integrate_path(const Path& path, const std::function<Vec3c(cplx)>& integrand, double abs_tol,
                            int max_subdivisions) {
  PathIntegral result;
  if (path.pieces.empty()) return result;
  std::priority_queue<Interval, std::vector<Interval>, WorseFirst> queue;
  double total_error = 0.0, total_magnitude = 0.0;
  for (std::size_t i = 0; i < path.pieces.size(); ++i) {
    const auto [t0, t1] = piece_interval(path.pieces[i]);
    Interval iv = gauss_kronrod(path.pieces[i], i, t0, t1, integrand);
    total_error += iv.error;
    total_magnitude += iv.magnitude;
    queue.push(std::move(iv));
  }
  constexpr double eps = std::numeric_limits<double>::epsilon();
  auto target = [&] { return std::max(abs_tol, 50.0 * eps * total_magnitude); };
  while (total_error > target()) {
    if (static_cast<int>(queue.size()) >= max_subdivisions) throw QuadratureError(total_error, abs_tol);
    Interval worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.t0 + worst.t1);
    Interval left = gauss_kronrod(path.pieces[worst.piece], worst.piece, worst.t0, mid, integrand);
    Interval right = gauss_kronrod(path.pieces[worst.piece], worst.piece, mid, worst.t1, integrand);
    total_error += left.error + right.error - worst.error;
    total_magnitude += left.magnitude + right.magnitude - worst.magnitude;
    queue.push(std::move(left));
    queue.push(std::move(right));
  }
  // Sum in path order so the result does not depend on heap layout.
  std::vector<Interval> all;
  all.reserve(queue.size());
  while (!queue.empty()) {
    all.push_back(queue.top());
    queue.pop();
  }
  std::sort(all.begin(), all.end(), [](const Interval& a, const Interval& b) {
    if (a.piece != b.piece) return a.piece < b.piece;
    return a.t0 < b.t0;
  });
  result.error = 0.0;
  for (const auto& iv : all) {
    for (int k = 0; k < 3; ++k) result.value[k] += iv.value[k];
    result.error += iv.error;
  }
  result.intervals = static_cast<int>(all.size());
  return result;
}

}  // namespace maxsurf
