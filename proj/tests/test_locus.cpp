#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "maxsurf/locus.hpp"
#include "maxsurf/weierstrass.hpp"

using namespace maxsurf;

namespace {

std::vector<cplx> arc(cplx c, double r, double t0, double t1, int n) {
  std::vector<cplx> out;
  for (int k = 0; k < n; ++k) out.push_back(c + std::polar(r, t0 + (t1 - t0) * k / (n - 1)));
  return out;
}

}  // namespace

TEST(Locus, FitsExactCircle) {
  const auto l = fit_circle_or_line(arc(cplx(0.3, -1), 1.5, 0.2, 1.4, 24));
  ASSERT_TRUE(l.is_circle());
  EXPECT_NEAR(std::abs(l.center() - cplx(0.3, -1)), 0.0, 1e-12);
  EXPECT_NEAR(l.radius(), 1.5, 1e-12);
  EXPECT_LT(l.fit_residual, 1e-12);
}

TEST(Locus, FitsShortArcOfLargeCircle) {
  const auto l = fit_circle_or_line(arc(cplx(0, -100), 100, 1.5, 1.6, 24));
  ASSERT_TRUE(l.is_circle());
  EXPECT_NEAR(l.radius(), 100, 1e-6);
}

TEST(Locus, FitsLine) {
  std::vector<cplx> pts;
  for (int k = 0; k < 10; ++k) pts.push_back(cplx(1.0, 0.3 * k - 1.0));
  const auto l = fit_circle_or_line(pts);
  ASSERT_FALSE(l.is_circle());
  EXPECT_EQ(l.curvature(), 0.0);
  EXPECT_NEAR(std::abs(l.direction().real()), 0.0, 1e-12);
  EXPECT_NEAR(l.distance(cplx(3.0, 7.0)), 2.0, 1e-12);
  EXPECT_NEAR(std::abs(l.reflect(cplx(0.0, 2.0)) - cplx(2.0, 2.0)), 0.0, 1e-12);
}

TEST(Locus, NoisyFitRecordsResidual) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> n(0, 1e-4);
  auto pts = arc(0.0, 0.5, 0.0, 3.0, 50);
  for (auto& p : pts) p += cplx(n(rng), n(rng));
  const auto l = fit_circle_or_line(pts);
  EXPECT_NEAR(l.radius(), 0.5, 1e-4);
  EXPECT_GT(l.fit_residual, 1e-5);
  EXPECT_LT(l.fit_residual, 1e-3);
}

TEST(Locus, TooFewPoints) {
  try {
    fit_circle_or_line({0.0, 1.0, 1.0, 0.0});
    FAIL();
  } catch (const ContactError& e) {
    EXPECT_EQ(e.kind(), ContactError::Kind::InsufficientSamples);
  }
}

TEST(Locus, CircleReflectionIsInversion) {
  const auto c = CircleOrLine::circle(cplx(0, -1), std::sqrt(2.0));
  const cplx w(0.4, 0.9);
  const cplx r = c.reflect(w);
  EXPECT_NEAR(std::abs(w - c.center()) * std::abs(r - c.center()), 2.0, 1e-14);
  EXPECT_NEAR(std::abs(c.reflect(r) - w), 0.0, 1e-14);
  EXPECT_NEAR(c.distance(cplx(0, 1)), 2.0 - std::sqrt(2.0), 1e-15);
  const expr::Expr s = expr::parse("z");
  EXPECT_NEAR(std::abs(c.reflect_conjugated(s).eval(std::conj(w)) - r), 0.0, 1e-14);
  const auto l = CircleOrLine::line(1.0, cplx(0, 1));
  EXPECT_NEAR(std::abs(l.reflect_conjugated(s).eval(std::conj(w)) - l.reflect(w)), 0.0, 1e-14);
}

TEST(Locus, ClosedFormSpacelike) {
  // n = (0, 0, 1), c = -5/3: |w| = 1/2.
  const auto l = contact_locus({0, 0, 1}, -5.0 / 3);
  ASSERT_TRUE(l.is_circle());
  EXPECT_NEAR(std::abs(l.center()), 0.0, 1e-15);
  EXPECT_NEAR(l.radius(), 0.5, 1e-15);
}

TEST(Locus, ClosedFormTimelike) {
  // n = (0, 1, 0), c = 1/lambda: center -i lambda, radius sqrt(1 + lambda^2).
  for (const double lambda : {1.0, 0.5, -2.0}) {
    const auto l = contact_locus({0, 1, 0}, 1.0 / lambda);
    ASSERT_TRUE(l.is_circle());
    EXPECT_NEAR(std::abs(l.center() - cplx(0, -lambda)), 0.0, 1e-14);
    EXPECT_NEAR(l.radius(), std::sqrt(1 + lambda * lambda), 1e-14);
  }
}

TEST(Locus, ClosedFormLightlike) {
  // n = (1, 0, 1), c = 1 + lambda: center -1/lambda, radius |1 + 1/lambda|; lambda = 0 is Re w = 1.
  const auto l = contact_locus({1, 0, 1}, -1.0);
  ASSERT_TRUE(l.is_circle());
  EXPECT_NEAR(std::abs(l.center() - 0.5), 0.0, 1e-15);
  EXPECT_NEAR(l.radius(), 0.5, 1e-15);
  const auto line = contact_locus({1, 0, 1}, 1.0);
  ASSERT_FALSE(line.is_circle());
  EXPECT_NEAR(line.distance(cplx(1.0, 5.0)), 0.0, 1e-15);
}

TEST(Locus, ClosedFormAgreesWithGaussMap) {
  // Points on the locus have <N(w), n> = c.
  const LVector n{0.3, -0.2, 1.1};
  const double c = -1.7;
  const auto l = contact_locus(n, c);
  for (const cplx w : arc(l.center(), l.radius(), 0, 6, 12)) {
    EXPECT_NEAR(lorentz_inner(gauss_map_of(w), n), c, 1e-12);
  }
}

TEST(Locus, EmptyLocusThrows) {
  // <N, e3> = -N3 <= -1 on the upper sheet and >= 1 on the lower one; c = 0.5 is impossible.
  try {
    contact_locus({0, 0, 1}, 0.5);
    FAIL();
  } catch (const ContactError& e) {
    EXPECT_EQ(e.kind(), ContactError::Kind::GeometryMismatch);
  }
}

TEST(Locus, Describe) {
  EXPECT_NE(CircleOrLine::circle(0.0, 1.0).describe().find("circle"), std::string::npos);
  EXPECT_NE(CircleOrLine::line(0.0, 1.0).describe().find("line"), std::string::npos);
}
