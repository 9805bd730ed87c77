#include <gtest/gtest.h>

#include <cmath>

#include "maxsurf/extension.hpp"
#include "maxsurf/verify.hpp"

using namespace maxsurf;

namespace {

WeierstrassData make(const char* f, const char* g, Domain d, cplx z0 = 0.0, LVector X0 = {}) {
  return {expr::parse(f), expr::parse(g), d, z0, X0};
}

WeierstrassData spacelike_fixture() { return make("2i*exp(-i*z)", "0.5*exp(i*z)", Domain::half_disk(0.5)); }
WeierstrassData timelike_fixture() {
  return make("2/(1-(-i+sqrt(2)*exp(i*(pi/2+z)))^2)", "-i+sqrt(2)*exp(i*(pi/2+z))", Domain::half_disk(0.25));
}
WeierstrassData lightlike_fixture() {
  return make("2i/(1-(0.5+0.5*exp(i*(pi/2+z))))^2", "0.5+0.5*exp(i*(pi/2+z))", Domain::half_disk(0.4));
}

double max_gap(const expr::Expr& a, const expr::Expr& b, const Domain& d) {
  double worst = 0.0;
  for (const cplx z : d.grid(9, 9, 0.05)) worst = std::max(worst, std::abs(a.eval(z) - b.eval(z)));
  return worst;
}

const Gap& gap(const MatchingReport& m, const std::string& name) {
  for (const auto& g : m.gaps)
    if (g.name == name) return g;
  throw std::runtime_error("no gap " + name);
}

ContactError::Kind contact_kind(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const ContactError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no ContactError";
  return ContactError::Kind::InsufficientSamples;
}

}  // namespace

TEST(Contact, SpacelikeCircleAndTheta) {
  // f = 1 variant of the fixture; only g matters for the contact.
  const auto d = make("1", "0.5*exp(i*z)", Domain::half_disk(0.5));
  const ContactData c = measure_contact(d, Plane({0, 0, 1}, 0), ReflectionBoundary::real_axis());
  EXPECT_NEAR(c.c, -5.0 / 3, 1e-10);
  EXPECT_LT(c.deviation, 1e-8);
  EXPECT_NEAR(std::cosh(c.theta), 5.0 / 3, 1e-10);
  EXPECT_NEAR(std::tanh(c.theta / 2), 0.5, 1e-10);
  ASSERT_TRUE(c.fitted.is_circle());
  EXPECT_NEAR(std::abs(c.fitted.center()), 0.0, 1e-10);
  EXPECT_NEAR(c.fitted.radius(), 0.5, 1e-10);
  EXPECT_NEAR(c.closed.radius(), 0.5, 1e-12);
  EXPECT_EQ(c.plane_class, CausalClass::Spacelike);
  EXPECT_FALSE(c.notes.empty());
}

TEST(Contact, CatenoidCircleAtSlab) {
  const double b = -0.6;
  const auto d = make("1/z^2", "z", Domain::annulus(std::exp(-1.1), std::exp(b)), std::exp(b));
  const ContactData c = measure_contact(d, Plane({0, 0, 1}, -b), ReflectionBoundary::circle(std::exp(b)));
  EXPECT_LT(c.deviation, 1e-8);
  EXPECT_NEAR(c.fitted.radius(), std::exp(b), 1e-10);
  const double r2 = std::exp(2 * b);
  EXPECT_NEAR(c.c, -(1 + r2) / (1 - r2), 1e-10);
}

TEST(Contact, VaryingAngleIsRejected) {
  const auto d = make("1", "0.5*z", Domain::half_disk(0.5));
  EXPECT_EQ(contact_kind([&] { measure_contact(d, Plane({0, 0, 1}, 0), ReflectionBoundary::real_axis()); }),
            ContactError::Kind::HypothesisViolation);
  try {
    measure_contact(d, Plane({0, 0, 1}, 0), ReflectionBoundary::real_axis());
  } catch (const ContactError& e) {
    EXPECT_NE(std::string(e.what()).find("constant-angle hypothesis violated"), std::string::npos);
  }
}

TEST(Contact, OrthogonalTimelikeIsRejected) {
  // g real on the axis: <N, e2> = 2 Im g / (1 - |g|^2) = 0.
  const auto d = make("1", "0.3*z", Domain::half_disk(0.5));
  try {
    measure_contact(d, Plane({0, 1, 0}, 0), ReflectionBoundary::real_axis());
    FAIL();
  } catch (const ContactError& e) {
    EXPECT_EQ(e.kind(), ContactError::Kind::OrthogonalContact);
    EXPECT_NE(std::string(e.what()).find("symmetric-reflection"), std::string::npos);
  }
}

TEST(Contact, NormalizedPlane) {
  const Plane p = normalized_plane(Plane({0, 0, 2}, 4));
  EXPECT_EQ(p.normal(), (LVector{0, 0, 1}));
  EXPECT_EQ(p.offset(), 2.0);
  const Plane l = normalized_plane(Plane({2, 0, 2}, 1));
  EXPECT_EQ(l.normal(), (LVector{2, 0, 2}));
}

TEST(Datum, Labels) {
  EXPECT_EQ(HarmonicDatum::for_normal({0, 0, 1}).label, "x3");
  EXPECT_EQ(HarmonicDatum::for_normal({0, 1, 0}).label, "x2");
  EXPECT_EQ(HarmonicDatum::for_normal({1, 0, 1}).label, "psi");
}

TEST(Datum, EtaIdentity) {
  // f q(g) is the derivative of the datum coordinate: x3, x2, psi = x1 - x3, or <X, n> otherwise.
  const cplx f(0.7, -0.2), g(0.3, 0.4);
  const PhiTriple p = phi_from(f, g);
  const LVector generic{0.3, -0.4, 1.2};
  const std::vector<std::pair<LVector, cplx>> cases = {
      {{0, 0, 1}, p.phi3},
      {{0, 1, 0}, p.phi2},
      {{1, 0, 1}, p.phi1 - p.phi3},
      {generic, generic.x1 * p.phi1 + generic.x2 * p.phi2 - generic.x3 * p.phi3}};
  for (const auto& [n, eta] : cases) {
    const HarmonicDatum h = HarmonicDatum::for_normal(n);
    EXPECT_NEAR(std::abs(f * h.q(g) - eta), 0.0, 1e-15) << h.label;
    EXPECT_NEAR(std::abs(h.q(expr::constant(g)).eval(0.0) - h.q(g)), 0.0, 1e-15);
  }
  // psi: (1/2) f (1 - g)^2 = phi1 - phi3.
  EXPECT_NEAR(std::abs(0.5 * f * (1.0 - g) * (1.0 - g) - (p.phi1 - p.phi3)), 0.0, 1e-15);
}

TEST(Extend, SpacelikeSelfSymmetric) {
  const auto d = spacelike_fixture();
  const ExtendedSurface e = extend(d, Plane({0, 0, 1}, 0));
  EXPECT_EQ(e.datum.label, "x3");
  EXPECT_TRUE(e.matching.pass());
  EXPECT_LT(max_gap(e.reflected.g, d.g, e.reflected.domain), 1e-12);
  EXPECT_LT(max_gap(e.reflected.f, d.f, e.reflected.domain), 1e-12);
  for (const cplx u : {-0.3, 0.0, 0.2}) EXPECT_NEAR(std::abs(e.reflected.g.eval(u)), 0.5, 1e-10);
  EXPECT_LE(gap(e.matching, "g_value").value, 1e-7);
  EXPECT_LE(gap(e.matching, "f_derivative").value, 1e-7);
  EXPECT_NE(expr::format(e.reflected.g).find("sconj("), std::string::npos);
}

TEST(Extend, TimelikeSelfSymmetric) {
  const auto d = timelike_fixture();
  const ExtendedSurface e = extend(d, Plane({0, 1, 0}, 0));
  EXPECT_EQ(e.datum.label, "x2");
  EXPECT_NEAR(e.contact.lambda, 1.0, 1e-10);
  EXPECT_TRUE(e.matching.pass());
  EXPECT_LT(max_gap(e.reflected.g, d.g, e.reflected.domain), 1e-10);
  EXPECT_LT(max_gap(e.reflected.f, d.f, e.reflected.domain), 1e-10);
  for (const auto& g : e.matching.gaps)
    if (g.name.find("_value") != std::string::npos || g.name.find("_derivative") != std::string::npos)
      EXPECT_LT(g.value, 1e-10) << g.name;
  for (const cplx u : {-0.2, 0.0, 0.1}) {
    const cplx g = e.reflected.g.eval(u);
    EXPECT_NEAR(g.real() * g.real() + (g.imag() + 1) * (g.imag() + 1), 2.0, 1e-10);
  }
  // Restriction to the primary half is the original.
  const SurfaceView v = e.view();
  EXPECT_EQ(&v.piece_at(cplx(0.1, 0.1)), &e.original);
}

TEST(Extend, LightlikeSelfSymmetric) {
  const auto d = lightlike_fixture();
  const ExtendedSurface e = extend(d, Plane({1, 0, 1}, 0));
  EXPECT_EQ(e.datum.label, "psi");
  EXPECT_NEAR(e.contact.c, -1.0, 1e-10);
  EXPECT_NEAR(e.contact.lambda, -2.0, 1e-10);
  EXPECT_NEAR(std::abs(e.contact.fitted.center() - 0.5), 0.0, 1e-10);
  EXPECT_NEAR(e.contact.fitted.radius(), 0.5, 1e-10);
  EXPECT_TRUE(e.matching.pass());
  EXPECT_LT(max_gap(e.reflected.g, d.g, e.reflected.domain), 1e-10);
  EXPECT_TRUE(e.warnings.empty());
}

TEST(Extend, LightlikeLambdaZeroWarns) {
  // g = 1 - i t/2 on the axis, Re g = 1 there: line locus, lambda = 0.
  // |g|^2 = 1 + y + |z|^2/4 > 1 on the upper half, so |g| = 1 only at z = 0; keep the domain off it.
  const auto d = make("1", "1-0.5i*z", Domain::half_annulus(0.5, 0.9), cplx(0, 0.7));
  try {
    const ExtendedSurface e = extend(d, Plane({1, 0, 1}, 0));
    EXPECT_FALSE(e.contact.fitted.is_circle());
    EXPECT_NEAR(e.contact.lambda, 0.0, 1e-8);
    EXPECT_FALSE(e.warnings.empty());
    // Line reflection: g_ext(u) = 2 - conj(g(u)) fixes Re w = 1.
    for (const cplx u : {0.6, -0.8}) EXPECT_NEAR(e.reflected.g.eval(u).real(), 1.0, 1e-10);
  } catch (const ContactError& err) {
    FAIL() << err.what();
  }
}

TEST(Extend, DispatchChecksClass) {
  const auto d = spacelike_fixture();
  const ContactData c = measure_contact(d, Plane({0, 0, 1}, 0), ReflectionBoundary::real_axis());
  // A class mismatch is a usage error, not a contact failure.
  EXPECT_THROW(extend_timelike(d, c, ReflectionBoundary::real_axis()), Error);
  EXPECT_THROW(extend_lightlike(d, c, ReflectionBoundary::real_axis()), Error);
  EXPECT_NO_THROW(extend_spacelike(d, c, ReflectionBoundary::real_axis()));
}

TEST(Extend, ShiftedPlaneMatchesC1) {
  // Shifted plane x3 = 1/4 and a non-constant eta = phi3 = i (1 + 0.3 z), imaginary on the axis.
  const auto d = make("2i*(1+0.3*z)*exp(-i*z)", "0.5*exp(i*z)", Domain::half_disk(0.5), 0.0, {0, 0, 0.25});
  const ExtendedSurface e = extend(d, Plane({0, 0, 1}, -0.25));
  EXPECT_TRUE(e.matching.pass());
  EXPECT_LE(gap(e.matching, "plane_containment").value, 1e-9);
  EXPECT_LE(gap(e.matching, "reflection_symmetry").value, 1e-9);
  const auto rep = full_diagnostics(e);
  for (const auto& c : rep.checks) EXPECT_TRUE(c.pass) << c.name << " " << c.value << " " << c.note;
}

TEST(Extend, InvolutionTwice) {
  for (const auto& [d, plane] : {std::pair{spacelike_fixture(), Plane({0, 0, 1}, 0)},
                                 std::pair{timelike_fixture(), Plane({0, 1, 0}, 0)},
                                 std::pair{lightlike_fixture(), Plane({1, 0, 1}, 0)}}) {
    const ExtendedSurface e = extend(d, plane);
    const ReflectedPair back = reflect_weierstrass(e.reflected.f, e.reflected.g, e.contact.fitted, e.datum, e.boundary);
    EXPECT_LT(max_gap(back.g, d.g, d.domain), 1e-10);
    EXPECT_LT(max_gap(back.f, d.f, d.domain), 1e-10);
  }
}

TEST(Extend, CatenoidSlabMapsSlices) {
  const double a = -1.0, b = -0.6;
  const auto d = make("1/z^2", "z", Domain::annulus(std::exp(-1.1), std::exp(b)), std::exp(b),
                      catenoid_reference(b, 0));
  const ExtendedSurface e = extend(d, Plane({0, 0, 1}, -b));
  EXPECT_TRUE(e.matching.pass());
  const SurfaceView v = e.view();
  const double rho2 = std::exp(2 * b);
  for (int k = 0; k < 12; ++k) {
    const cplx za = std::polar(std::exp(a), -3.0 + 0.5 * k);
    const cplx image = rho2 / std::conj(za);
    EXPECT_NEAR(v.evaluate(image, {}).X.x3, 2 * b - a, 1e-7);
  }
}

TEST(Extend, CircularAcrossConelikeCircle) {
  const auto d = make("1/z^2", "z", Domain::annulus(std::exp(-1.5), 1.0), 1.0);
  const ExtendedSurface e = extend_circular(d, 1.0, Plane({0, 0, 1}, 0));
  EXPECT_TRUE(e.contact.conelike);
  EXPECT_TRUE(e.matching.pass());
  EXPECT_LT(max_gap(e.reflected.g, d.g, e.reflected.domain), 1e-10);
  EXPECT_LT(max_gap(e.reflected.f, d.f, e.reflected.domain), 1e-10);
  const SurfaceView v = e.view();
  for (const double u : {0.2, 0.7, 1.2}) {
    const LVector X = v.evaluate(std::polar(std::exp(u), 0.8), {}).X;
    EXPECT_LT(euclidean_norm(X - catenoid_reference(u, 0.8)), 1e-8) << u;
  }
  for (const cplx z : {std::polar(1.0, 0.3), std::polar(1.0, -2.0)})
    EXPECT_LT(std::abs(e.reflected.g.eval(z) - d.g.eval(z)), 1e-10);
  const ReflectedPair back = reflect_weierstrass(e.reflected.f, e.reflected.g, e.contact.fitted, e.datum, e.boundary);
  EXPECT_LT(max_gap(back.g, d.g, d.domain), 1e-10);
}

TEST(Extend, CircularRequiresSpacelike) {
  const auto d = make("1/z^2", "z", Domain::annulus(std::exp(-1.5), 1.0), 1.0);
  EXPECT_THROW(extend_circular(d, 1.0, Plane({0, 1, 0}, 0)), Error);
}

TEST(Extend, SingularReconstruction) {
  // |g| = 1/2 on the axis, but g has a pole at 0.3i; g_ext = 1/(4 sconj(g)) then vanishes at -0.3i,
  // where f_ext = phi3_ext / g_ext blows up.
  const auto d = make("1", "0.5*exp(i*z)*(z+0.3i)/(z-0.3i)", Domain::half_disk(0.5));
  EXPECT_EQ(contact_kind([&] { extend(d, Plane({0, 0, 1}, 0)); }), ContactError::Kind::SingularReconstruction);
}

TEST(Matching, DetectsMismatch) {
  const auto d = spacelike_fixture();
  ExtendedSurface e = extend(d, Plane({0, 0, 1}, 0));
  WeierstrassData wrong = e.reflected;
  wrong.g = expr::parse("0.5*exp(i*z)+0.001*z");
  MatchingInputs in;
  const Plane p({0, 0, 1}, 0);
  in.plane = &p;
  const MatchingReport m = match_pieces(e.original, wrong, e.boundary, in);
  EXPECT_FALSE(m.pass());
  EXPECT_GT(gap(m, "g_value").value, 1e-4);
}
