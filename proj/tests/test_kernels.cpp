#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <random>

#include "maxsurf/kernels.hpp"

using namespace maxsurf;

namespace {

WeierstrassData catenoid() {
  return {expr::parse("1/z^2"), expr::parse("z"), Domain::annulus(std::exp(-1.5), 1.0), 1.0, {}};
}

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }
bool same_bits(const LVector& a, const LVector& b) {
  return same_bits(a.x1, b.x1) && same_bits(a.x2, b.x2) && same_bits(a.x3, b.x3);
}

}  // namespace

TEST(Kernels, SampleSerialMatchesParallelBitForBit) {
  const auto d = catenoid();
  const SurfaceView view(d);
  const auto pts = d.domain.grid(17, 23, 0.0);
  const auto s = sample_surface_serial(view, pts, {});
  const auto p = sample_surface_parallel(view, pts, {});
  ASSERT_EQ(s.size(), pts.size());
  ASSERT_EQ(p.size(), pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    EXPECT_EQ(s[i].ok, p[i].ok);
    EXPECT_EQ(s[i].normal_ok, p[i].normal_ok);
    EXPECT_TRUE(same_bits(s[i].X, p[i].X)) << i;
    EXPECT_TRUE(same_bits(s[i].N, p[i].N)) << i;
    EXPECT_TRUE(same_bits(s[i].conformal, p[i].conformal)) << i;
    EXPECT_TRUE(same_bits(s[i].error, p[i].error)) << i;
  }
}

TEST(Kernels, SampleValues) {
  const auto d = catenoid();
  const SurfaceView view(d);
  const std::vector<cplx> pts{std::exp(-1.0), std::polar(1.0, 0.5), 5.0};
  const auto s = sample_surface_serial(view, pts, {});
  EXPECT_TRUE(s[0].ok);
  EXPECT_TRUE(s[0].normal_ok);
  EXPECT_NEAR(s[0].X.x1, -std::sinh(1.0), 1e-10);
  EXPECT_NEAR(s[0].conformal, 0.5 * std::exp(4.0) * std::pow(1 - std::exp(-2.0), 2), 1e-10);
  // |g| = 1: X defined, N not, conformal factor zero.
  EXPECT_TRUE(s[1].ok);
  EXPECT_FALSE(s[1].normal_ok);
  EXPECT_LT(s[1].conformal, 1e-20);
  // Outside the domain.
  EXPECT_FALSE(s[2].ok);
}

TEST(Kernels, IdentitySerialMatchesParallel) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> r(std::exp(-1.5), 1.0), t(-3.1, 3.1);
  std::vector<cplx> pts;
  for (int k = 0; k < 10000; ++k) pts.push_back(std::polar(r(rng), t(rng)));
  const auto d = catenoid();
  const IdentityStats a = identity_stats_serial(d, pts);
  const IdentityStats b = identity_stats_parallel(d, pts);
  EXPECT_EQ(a.count, 10000u);
  EXPECT_EQ(a.failures, 0u);
  EXPECT_TRUE(same_bits(a.max_relative_residual, b.max_relative_residual));
  EXPECT_TRUE(same_bits(a.min_metric, b.min_metric));
  EXPECT_EQ(a.worst_index, b.worst_index);
  EXPECT_LT(a.max_relative_residual, 1e-12);
  EXPECT_GT(a.min_metric, 0.0);
}

TEST(Kernels, IdentityCountsFailures) {
  WeierstrassData d{expr::parse("1/z"), expr::parse("z"), Domain::disk(1.0), 0.5, {}};
  const IdentityStats s = identity_stats_serial(d, {0.0, 0.5});
  EXPECT_EQ(s.failures, 1u);
  EXPECT_EQ(s.count, 2u);
}

TEST(Kernels, PiecewiseViewIsDeterministic) {
  const auto up = WeierstrassData{expr::parse("exp(z)"), expr::parse("0.3*z"), Domain::half_disk(0.8), 0.0, {}};
  auto down = up;
  down.domain = Domain::half_disk(0.8, Half::Lower);
  const SurfaceView v(up, down, ReflectionBoundary::real_axis());
  const auto pts = v.domain().grid(9, 9, 0.0);
  const auto a = sample_surface_parallel(v, pts, {});
  const auto b = sample_surface_parallel(v, pts, {});
  for (std::size_t i = 0; i < pts.size(); ++i) EXPECT_TRUE(same_bits(a[i].X, b[i].X));
}
