#include <gtest/gtest.h>

#include <cmath>

#include "maxsurf/config.hpp"
#include "maxsurf/extension.hpp"

using namespace maxsurf;

namespace {

std::string field_of(const std::string& text) {
  try {
    to_data(parse_config(text));
  } catch (const ConfigError& e) {
    return e.field();
  }
  return "";
}

}  // namespace

TEST(Config, ParsesAllKeys) {
  const auto cfg = parse_config(
      "# comment\n"
      "f = \"1/z^2\"\n"
      "g = z\n"
      "domain = annulus 0.2, 1\n"
      "z0 = 1, 0\n"
      "X0 = 1 2 3\n"
      "puncture = 0.5 0\n"
      "puncture = -0.5 0 pole 2\n"
      "tol = 1e-9\n"
      "plane = 0 0 1 -0.5\n");
  EXPECT_EQ(cfg.f, "1/z^2");
  EXPECT_EQ(cfg.g, "z");
  EXPECT_EQ(cfg.domain, "annulus 0.2, 1");
  EXPECT_EQ(cfg.z0, cplx(1, 0));
  EXPECT_EQ(cfg.X0, (LVector{1, 2, 3}));
  ASSERT_EQ(cfg.punctures.size(), 2u);
  EXPECT_EQ(cfg.punctures[1].pole_order, 2);
  EXPECT_EQ(cfg.tol, 1e-9);
  ASSERT_TRUE(cfg.plane());
  EXPECT_EQ(cfg.plane()->offset(), -0.5);
  EXPECT_FALSE(cfg.is_extended());
}

TEST(Config, Defaults) {
  const auto cfg = parse_config("f = 1\ng = 0\ndomain = disk 1\nz0 = 0 0\n");
  EXPECT_EQ(cfg.X0, (LVector{0, 0, 0}));
  EXPECT_EQ(cfg.tol, 1e-10);
  EXPECT_FALSE(cfg.plane());
}

TEST(Config, ErrorsNameTheField) {
  const std::string base = "g = 0\ndomain = disk 1\nz0 = 0 0\n";
  try {
    parse_config(base);
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.field(), "f");
    EXPECT_NE(std::string(e.what()).find("missing"), std::string::npos);
  }
  auto field = [](const std::string& text) {
    try {
      parse_config(text);
    } catch (const ConfigError& e) {
      return e.field();
    }
    return std::string();
  };
  EXPECT_EQ(field("f = 1\nf = 2\n" + base), "f");
  EXPECT_EQ(field("f = 1\ncolour = red\n" + base), "colour");
  EXPECT_EQ(field("f = 1\nX0 = 1 2\n" + base), "X0");
  EXPECT_EQ(field("f = 1\ntol = -1\n" + base), "tol");
  EXPECT_EQ(field("f = 1\nplane = 0 0 0 1\n" + base), "plane");
  EXPECT_EQ(field("f = 1\npuncture = 0 0 pole x\n" + base), "puncture");
  EXPECT_EQ(field("f = 1\nnonsense\n" + base), "line 2");
  EXPECT_EQ(field("f = 1\ng = 0\ndomain = disk 1\nz0 = 0 zero\n"), "z0");
}

TEST(Config, ToDataErrorsNameTheField) {
  EXPECT_EQ(field_of("f = 1/\ng = 0\ndomain = disk 1\nz0 = 0 0\n"), "f");
  EXPECT_EQ(field_of("f = 1\ng = abs(z)\ndomain = disk 1\nz0 = 0 0\n"), "g");
  EXPECT_EQ(field_of("f = 1\ng = 0\ndomain = square 1\nz0 = 0 0\n"), "domain");
  EXPECT_EQ(field_of("f = 1\ng = 0\ndomain = disk 1\nz0 = 2 0\n"), "z0");
  EXPECT_EQ(field_of("f = 1\ng = 0\ndomain = disk 1\nz0 = 0 0\npuncture = 3 0\n"), "puncture");
  EXPECT_EQ(field_of("f = 1\ng = 0\ndomain = disk 1\nz0 = 0 0\npuncture = 0 0\n"), "z0");
  EXPECT_EQ(field_of("f = 1\ng = 0\ndomain = disk 1\nz0 = 0 0\n"), "");
}

TEST(Config, LoadMissingFile) {
  try {
    load_config("/nonexistent/x.cfg");
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.field(), "file");
  }
}

TEST(Config, FormatRoundTrips) {
  const auto cfg = parse_config(catenoid_config_text());
  const std::string text = format_config(cfg);
  EXPECT_EQ(format_config(parse_config(text)), text);
  EXPECT_EQ(parse_config(text).domain, cfg.domain);
  const auto d = to_data(cfg);
  EXPECT_NEAR(d.domain.inner_radius(), std::exp(-1.5), 1e-16);
  EXPECT_EQ(d.z0, cplx(1.0));
}

TEST(Config, FormatsPrecisely) {
  SurfaceConfig cfg = parse_config("f = 1\ng = 0\ndomain = disk 1\nz0 = 0.1 0\n");
  cfg.X0 = {1.0 / 3, 0, 0};
  EXPECT_EQ(parse_config(format_config(cfg)).X0.x1, 1.0 / 3);
}

TEST(Config, ExtendedRoundTrip) {
  SurfaceConfig base = parse_config(
      "f = 2i*exp(-i*z)\ng = 0.5*exp(i*z)\ndomain = upper-half-disk 0.5\nz0 = 0 0\nplane = 0 0 1 0\n");
  const auto data = to_data(base);
  const ExtendedSurface e = extend(data, *base.plane());
  const SurfaceConfig ext = extended_config(base, e.reflected, e.boundary);
  EXPECT_TRUE(ext.is_extended());
  const SurfaceConfig again = parse_config(format_config(ext));
  const ExtendedData d = to_extended(again);
  EXPECT_EQ(d.boundary.describe(), "real-axis");
  EXPECT_EQ(d.reflected.domain.describe(), "lower-half-disk 0.5");
  for (const cplx z : {cplx(0.1, -0.2), cplx(-0.3, -0.1)}) {
    EXPECT_NEAR(std::abs(d.reflected.g.eval(z) - e.reflected.g.eval(z)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(d.reflected.f.eval(z) - e.reflected.f.eval(z)), 0.0, 1e-15);
  }
  EXPECT_EQ(d.reflected.X0, e.reflected.X0);
}

TEST(Config, ExtendedMissingKey) {
  SurfaceConfig cfg = parse_config("f = 1\ng = 0\ndomain = upper-half-disk 1\nz0 = 0 0\nboundary = real-axis\n");
  try {
    to_extended(cfg);
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.field(), "f_ext");
  }
}
