#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "maxsurf/weierstrass.hpp"

using namespace maxsurf;

namespace {

WeierstrassData plane_data() { return {expr::parse("1"), expr::parse("0"), Domain::disk(1.0), 0.0, {}}; }

WeierstrassData catenoid() {
  return {expr::parse("1/z^2"), expr::parse("z"), Domain::annulus(std::exp(-1.5), 1.0), 1.0, {}};
}

// Closed-form antiderivatives of the catenoid: (z - 1/z)/2, (i/2)(2 - z - 1/z), log z.
LVector catenoid_closed(cplx z) {
  const cplx a = 0.5 * (z - 1.0 / z);
  const cplx b = cplx(0, 0.5) * (2.0 - z - 1.0 / z);
  return {a.real(), b.real(), std::log(std::abs(z))};
}

double dist(const LVector& a, const LVector& b) { return euclidean_norm(a - b); }

}  // namespace

TEST(Phi, Examples) {
  const PhiTriple p = phi(plane_data(), cplx(0.3, 0.2));
  EXPECT_EQ(p.phi1, cplx(0.5));
  EXPECT_EQ(p.phi2, cplx(0, 0.5));
  EXPECT_EQ(p.phi3, cplx(0));
  const PhiTriple c = phi(catenoid(), 1.0);
  EXPECT_EQ(c.phi1, cplx(1));
  EXPECT_EQ(c.phi2, cplx(0));
  EXPECT_EQ(c.phi3, cplx(1));
}

TEST(Phi, IdentityAndMetricOnRandomData) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-3, 3);
  for (int k = 0; k < 10000; ++k) {
    const cplx f(u(rng), u(rng)), g(u(rng), u(rng));
    const PhiTriple p = phi_from(f, g);
    EXPECT_LT(p.relative_identity_residual(), 1e-15);
    const double closed = 0.5 * std::norm(f) * std::pow(1.0 - std::norm(g), 2);
    EXPECT_NEAR(p.metric(), closed, 1e-12 * std::max(1.0, closed));
  }
}

TEST(Phi, OutsideDomainThrows) {
  EXPECT_THROW(phi(plane_data(), 2.0), DomainError);
  WeierstrassData d = catenoid();
  d.domain = Domain::disk(1.0);
  EXPECT_THROW(phi(d, 0.0), EvalError);
}

TEST(Evaluate, PlaneClosedForm) {
  const auto d = plane_data();
  for (const cplx z : {cplx(0.2, 0.1), cplx(-0.5, 0.3), cplx(0, -0.9)}) {
    const LVector X = evaluate_surface(d, z);
    EXPECT_NEAR(X.x1, z.real() / 2, 1e-15);
    EXPECT_NEAR(X.x2, -z.imag() / 2, 1e-15);
    EXPECT_NEAR(X.x3, 0.0, 1e-15);
  }
}

TEST(Evaluate, CatenoidClosedForm) {
  const auto d = catenoid();
  const LVector X = evaluate_surface(d, std::exp(-1.0));
  EXPECT_NEAR(X.x1, -std::sinh(1.0), 1e-10);
  EXPECT_NEAR(X.x2, 0.0, 1e-10);
  EXPECT_NEAR(X.x3, -1.0, 1e-10);
  for (const cplx z : d.domain.grid(9, 9, 0.05)) EXPECT_LT(dist(evaluate_surface(d, z), catenoid_closed(z)), 1e-9) << z;
}

TEST(Evaluate, StartPointGivesX0) {
  WeierstrassData d = catenoid();
  d.X0 = {1, 2, 3};
  const SurfacePoint p = integrate_surface(d, d.z0, {});
  EXPECT_EQ(p.X, d.X0);
  EXPECT_EQ(p.error, 0.0);
}

TEST(Evaluate, ReportsPathAndError) {
  const auto d = catenoid();
  const SurfacePoint p = integrate_surface(d, cplx(-0.5, 0.0), {});
  EXPECT_FALSE(p.path.pieces.empty());
  EXPECT_LE(p.error, 1e-10);
  EXPECT_GE(p.intervals, 1);
  EXPECT_TRUE(path_admissible(d.domain, p.path, 1e-3));
}

TEST(Evaluate, RejectsOutsidePoints) {
  EXPECT_THROW(evaluate_surface(plane_data(), 2.0), DomainError);
  WeierstrassData bad = plane_data();
  bad.z0 = 3.0;
  EXPECT_THROW(validate(bad), DomainError);
}

TEST(Evaluate, AlongExplicitPathMatches) {
  const auto d = catenoid();
  const cplx z = std::polar(0.6, 2.0);
  const SurfacePoint a = integrate_surface(d, z, {});
  const Path alt = alternative_path(d.domain, a.path, 1e-3);
  const SurfacePoint b = integrate_along(d, alt, {});
  EXPECT_LT(dist(a.X, b.X), 1e-9);
}

TEST(Increment, MatchesDifferenceOfClosedForms) {
  const auto d = catenoid();
  const cplx a = std::polar(0.5, 0.3), b = std::polar(0.52, 0.31);
  EXPECT_LT(dist(surface_increment(d, a, b), catenoid_closed(b) - catenoid_closed(a)), 1e-15);
}

TEST(Laplacian, SecondOrderDecay) {
  const auto d = catenoid();
  const cplx z = std::polar(0.5, 1.0);
  const double r1 = euclidean_norm(discrete_laplacian(d, z, 1e-2));
  const double r2 = euclidean_norm(discrete_laplacian(d, z, 5e-3));
  EXPECT_NEAR(std::log2(r1 / r2), 2.0, 0.1);
  EXPECT_EQ(euclidean_norm(discrete_laplacian(plane_data(), 0.1, 1e-3)), 0.0);
}

TEST(Gauss, Examples) {
  EXPECT_EQ(gauss_map_of(0.0), (LVector{0, 0, 1}));
  const LVector N = gauss_map_of(0.5);
  EXPECT_NEAR(N.x1, 4.0 / 3, 1e-15);
  EXPECT_NEAR(N.x2, 0.0, 1e-15);
  EXPECT_NEAR(N.x3, 5.0 / 3, 1e-15);
  EXPECT_NEAR(lorentz_inner(N, N), -1.0, 1e-14);
  EXPECT_THROW(gauss_map_of(cplx(0.6, 0.8)), DegenerateMetricError);
  EXPECT_LT(gauss_map_of(2.0).x3, 0.0);
}

TEST(Gauss, OnHyperboloidAndStereoInverts) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-0.95, 0.95);
  const auto d = catenoid();
  for (int k = 0; k < 1000; ++k) {
    const cplx g(u(rng), u(rng));
    if (std::abs(g) > 0.99) continue;
    const LVector N = gauss_map_of(g);
    EXPECT_NEAR(lorentz_inner(N, N), -1.0, 1e-9 * std::max(1.0, N.x3 * N.x3));
    EXPECT_LT(std::abs(stereo_inverse(N) - g), 1e-10);
  }
  EXPECT_EQ(stereo_inverse({0, 0, 1}), cplx(0));
  EXPECT_NEAR(std::abs(stereo_inverse({4.0 / 3, 0, 5.0 / 3}) - 0.5), 0.0, 1e-15);
  EXPECT_THROW(stereo_inverse({1, 0, 0}), Error);
  EXPECT_THROW(stereo_inverse(gauss_map_of(2.0)), Error);
  EXPECT_NEAR(std::abs(stereo_inverse_any_sheet(gauss_map_of(2.0)) - 2.0), 0.0, 1e-14);
  const cplx z = std::polar(0.4, 0.7);
  EXPECT_LT(std::abs(stereo_inverse(gauss_map(d, z)) - z), 1e-14);
}

TEST(Conformal, Examples) {
  EXPECT_EQ(conformal_factor(plane_data(), 0.3), 0.5);
  const auto d = catenoid();
  EXPECT_LT(conformal_factor(d, std::polar(1.0 - 1e-6, 0.4)), 1e-10);
  const cplx z = std::polar(0.5, 0.4);
  EXPECT_NEAR(conformal_factor(d, z), phi(d, z).metric(), 1e-12);
}

TEST(Sheets, UpperAndLower) {
  EXPECT_EQ(sheet_at(catenoid(), 0.5), Sheet::Upper);
  WeierstrassData out = catenoid();
  out.domain = Domain::annulus(1.0, 3.0);
  out.z0 = 2.0;
  EXPECT_EQ(sheet_of(out), Sheet::Lower);
  EXPECT_EQ(to_string(Sheet::Upper), "upper");
}

TEST(View, SingleAndPiecewise) {
  const auto up = WeierstrassData{expr::parse("1"), expr::parse("0"), Domain::half_disk(1.0), 0.0, {}};
  auto down = up;
  down.domain = Domain::half_disk(1.0, Half::Lower);
  down.X0 = {1, 1, 1};  // deliberately offset to tell the pieces apart
  const SurfaceView v(up, down, ReflectionBoundary::real_axis());
  EXPECT_TRUE(v.is_piecewise());
  EXPECT_EQ(&v.piece_at(cplx(0.1, 0.2)), &up);
  EXPECT_EQ(&v.piece_at(cplx(0.1, -0.2)), &down);
  EXPECT_EQ(&v.piece_at(0.3), &up);
  EXPECT_TRUE(v.in_closure(cplx(0.1, -0.2)));
  EXPECT_FALSE(v.in_closure(2.0));
  EXPECT_NEAR(v.evaluate(cplx(0.2, -0.1), {}).X.x3, 1.0, 1e-15);
  EXPECT_THROW(v.evaluate(2.0, {}), DomainError);

  const SurfaceView single(up);
  EXPECT_FALSE(single.is_piecewise());
  EXPECT_THROW(single.evaluate(cplx(0.1, -0.2), {}), DomainError);
}

TEST(Punctures, PathsKeepClear) {
  WeierstrassData d{expr::parse("z^2"), expr::parse("1/z"), Domain::punctured_disk(1.0), 0.5, {}};
  // f g^2 = 1: phi1 = (z^2 + 1)/2, phi2 = i(z^2 - 1)/2, phi3 = z.
  const cplx z(-0.5, 0.0);
  const SurfacePoint p = integrate_surface(d, z, {});
  const cplx a = (std::pow(z, 3) / 3.0 + z) / 2.0 - (std::pow(0.5, 3) / 3.0 + 0.5) / 2.0;
  EXPECT_NEAR(p.X.x1, a.real(), 1e-10);
  EXPECT_TRUE(path_admissible(d.domain, p.path, 1e-3));
}
