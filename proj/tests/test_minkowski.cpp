#include <gtest/gtest.h>

#include <random>

#include "maxsurf/error.hpp"
#include "maxsurf/minkowski.hpp"

using namespace maxsurf;

TEST(Minkowski, InnerProduct) {
  EXPECT_EQ(lorentz_inner({1, 0, 0}, {1, 0, 0}), 1.0);
  EXPECT_EQ(lorentz_inner({0, 0, 1}, {0, 0, 1}), -1.0);
  EXPECT_EQ(lorentz_inner({1, 0, 1}, {1, 0, 1}), 0.0);
  EXPECT_EQ(lorentz_inner({1, 2, 3}, {4, 5, 6}), 4.0 + 10.0 - 18.0);
}

TEST(Minkowski, CrossProduct) {
  EXPECT_EQ(lorentz_cross({1, 0, 0}, {0, 1, 0}), (LVector{0, 0, -1}));
  const LVector a{0.3, -1.2, 2.5};
  EXPECT_EQ(lorentz_cross(a, a), (LVector{0, 0, 0}));
}

TEST(Minkowski, CrossIsLorentzOrthogonal) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-2, 2);
  for (int k = 0; k < 1000; ++k) {
    const LVector a{u(rng), u(rng), u(rng)}, b{u(rng), u(rng), u(rng)};
    const LVector c = lorentz_cross(a, b);
    EXPECT_NEAR(lorentz_inner(c, a), 0.0, 1e-14);
    EXPECT_NEAR(lorentz_inner(c, b), 0.0, 1e-14);
    EXPECT_EQ(lorentz_cross(b, a), -c);
  }
}

TEST(Minkowski, CausalClass) {
  EXPECT_EQ(causal_class({1, 0, 0}), CausalClass::Spacelike);
  EXPECT_EQ(causal_class({1, 0, 1}), CausalClass::Lightlike);
  EXPECT_EQ(causal_class({0, 0, 1}), CausalClass::Timelike);
  EXPECT_EQ(causal_class({0, 0, 0}), CausalClass::Spacelike);
  EXPECT_EQ(causal_class_tol({1, 0, 1 + 1e-13}, 1e-9), CausalClass::Lightlike);
  EXPECT_EQ(causal_class({1, 0, 1 + 1e-13}), CausalClass::Timelike);
  EXPECT_EQ(to_string(CausalClass::Timelike), "timelike");
}

TEST(Minkowski, PlaneClass) {
  EXPECT_EQ(plane_class(Plane({0, 0, 1}, 0)), CausalClass::Spacelike);
  EXPECT_EQ(plane_class(Plane({0, 1, 0}, 0)), CausalClass::Timelike);
  EXPECT_EQ(plane_class(Plane({1, 0, 1}, 0)), CausalClass::Lightlike);
  EXPECT_EQ(plane_class(Plane({0, 0, 2}, 5)), CausalClass::Spacelike);
}

TEST(Minkowski, PlaneLevel) {
  const Plane p({0, 0, 1}, -0.6);  // x3 = 0.6
  EXPECT_DOUBLE_EQ(p.level({7, 8, 0.6}), 0.0);
  EXPECT_THROW(Plane({0, 0, 0}, 1), Error);
  EXPECT_THROW(Plane({NAN, 0, 1}, 1), Error);
}

TEST(Minkowski, Norms) {
  EXPECT_DOUBLE_EQ(lnorm({0, 0, 2}), 2.0);
  EXPECT_DOUBLE_EQ(lnorm({3, 4, 0}), 5.0);
  EXPECT_DOUBLE_EQ(lnorm({1, 0, 1}), 0.0);
  EXPECT_DOUBLE_EQ(euclidean_norm({1, 2, 2}), 3.0);
}
