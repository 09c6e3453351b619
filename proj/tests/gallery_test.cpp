#include <gtest/gtest.h>

#include <cmath>

#include "fd_oracle.hpp"
#include "isomin/errors.hpp"
#include "isomin/gallery.hpp"

using namespace isomin;
using namespace isomin::gallery;

TEST(Gallery, SaEarpValuesAtTheWaist) {
  const auto g = fixture("saearp", {.l = 1.0, .d = 2.0});
  EXPECT_NEAR(curvature(g.chart, {0.0, 0.3}), -0.6, 1e-12);
  EXPECT_NEAR(std::pow(g.angle("nu")(0.0, 0.3), 2), 0.6, 1e-14);
  EXPECT_EQ(g.angle("nu_bar")(0.0, 0.3), 0.0);
  EXPECT_EQ(g.angle("-nu")(0.5, 0.0), -g.angle("nu")(0.5, 0.0));
  EXPECT_TRUE(g.has_tag("screw-motion"));
}

TEST(Gallery, SaEarpPartners) {
  const auto p = saearp_partner(1.0, 2.0, 0.0);
  ASSERT_TRUE(p.has_value());
  EXPECT_NEAR(p->l_bar * p->l_bar, 2.0 / 3.0, 1e-15);
  EXPECT_FALSE(saearp_partner(1.0, 2.0, 0.95).has_value());
  EXPECT_THROW(saearp_partner(1.0, 0.5, 0.0), DomainError);
  const auto fam = saearp_partner_family(0.5, 1.5, 21);
  ASSERT_FALSE(fam.empty());
  for (const auto& q : fam) {
    EXPECT_LT(std::abs(q.d_bar), 1.0);
    const double lhs = (1.5 * 1.5 - 1) / (0.25 + 1);
    const double rhs = (1 - q.d_bar * q.d_bar) / (q.d_bar * q.d_bar + q.l_bar * q.l_bar);
    EXPECT_NEAR(lhs, rhs, 1e-12);
  }
}

TEST(Gallery, HyperbolicTranslationIsAnIsometry) {
  for (double t : {-1.0, 0.3, 2.0})
    for (const auto& p : fd::random_points(Rect{-1.2, 1.2, -1.0, 1.0}, 30, 12)) {
      EXPECT_NEAR(translation_metric_ratio(t, p), 1.0, 1e-9);
    }
  const ChartPoint q = hyperbolic_translation(0.0, {0.4, -0.3});
  EXPECT_NEAR(q.u, 0.4, 1e-15);
  EXPECT_NEAR(q.v, -0.3, 1e-15);
  // Translation along v = 0 moves points of that geodesic along it.
  EXPECT_NEAR(hyperbolic_translation(0.8, {0.3, 0.0}).v, 0.0, 1e-15);
}

TEST(Gallery, TranslatedAngleIsComposedSine) {
  for (double t : {-1.0, 0.7, 2.0}) {
    const ScalarField mu = translated_catenoid_angle(t);
    for (const auto& p : fd::random_points(Rect{-1.2, 1.2, -1.0, 1.0}, 30, 13)) {
      EXPECT_NEAR(mu(p), std::sin(hyperbolic_translation(t, p).u), 1e-12);
    }
    EXPECT_NEAR(mu(0.0, 0.0), -std::tanh(t), 1e-15);
  }
}

TEST(Gallery, TranslatedAnglesAreDistinctButMatched) {
  const Rect dom{-1.2, 1.2, -1.0, 1.0};
  const auto g = fixture("parabolic-catenoid", {.t = 0.7});
  const auto m = match_translated_catenoid(g.angle("mu"), dom, 25, 1e-12);
  ASSERT_TRUE(m.has_value());
  EXPECT_NEAR(*m, 0.7, 1e-12);
  EXPECT_GT(std::abs(g.angle("mu")(0.3, 0.5) - fixture("parabolic-catenoid").angle("mu")(0.3, 0.5)), 0.1);
  const ScalarField other = ScalarField::analytic([](const Jet& u, const Jet& v) { return 0.9 * sin(u) + 0.0 * v; });
  EXPECT_FALSE(match_translated_catenoid(other, dom, 25, 1e-8).has_value());
}

TEST(Gallery, FixtureValidation) {
  EXPECT_THROW(fixture("helicoid"), ConfigError);
  EXPECT_THROW(fixture("catenoid", {.beta = 0.5}), ConfigError);
  EXPECT_THROW(fixture("saearp", {.d = 1.0}), ConfigError);
  EXPECT_THROW(fixture("saearp", {.c = 1.0}), ConfigError);
  EXPECT_THROW(fixture("vertical-plane", {.c = 0.0}), ConfigError);
  EXPECT_THROW(fixture("saearp").angle("mu"), ConfigError);
  EXPECT_NO_THROW(fixture("saearp", {.c = -1.0}));
  EXPECT_EQ(fixture("horizontal-slice", {.c = 3.0}).chart.c(), 3.0);
  EXPECT_EQ(fixture_names().size(), 6u);
}

TEST(Gallery, ConstantCurvatureTags) {
  for (const auto& name : fixture_names()) {
    const auto g = fixture(name);
    const bool constant = g.has_tag("constant-curvature");
    double lo = 1e300, hi = -1e300;
    for (const auto& p : fd::random_points(g.chart.domain(), 20, 6)) {
      const double K = curvature(g.chart, p);
      lo = std::min(lo, K);
      hi = std::max(hi, K);
    }
    EXPECT_EQ(constant, hi - lo < 1e-10) << name;
  }
}
