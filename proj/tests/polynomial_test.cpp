#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "isomin/jet.hpp"
#include "isomin/polynomial.hpp"

using isomin::Polynomial;
using isomin::real_roots;

namespace {

Polynomial<double> from_roots(const std::vector<double>& roots) {
  Polynomial<double> p{1.0};
  for (double r : roots) p = p * Polynomial<double>{-r, 1.0};
  return p;
}

}  // namespace

TEST(Polynomial, EvaluatesAndDifferentiates) {
  const Polynomial<double> p{1.0, -2.0, 0.0, 3.0};
  EXPECT_DOUBLE_EQ(p(2.0), 1 - 4 + 24);
  const auto d = p.derivative();
  EXPECT_EQ(d.degree(), 2);
  EXPECT_DOUBLE_EQ(d(2.0), -2 + 36);
  EXPECT_DOUBLE_EQ(isomin::coefficient_scale(p), 3.0);
}

TEST(Polynomial, SimpleRoots) {
  const auto r = real_roots(from_roots({-0.5, 0.1, 0.9}), 0.0, 1.0);
  ASSERT_EQ(r.size(), 2u);
  EXPECT_NEAR(r[0], 0.1, 1e-14);
  EXPECT_NEAR(r[1], 0.9, 1e-14);
}

TEST(Polynomial, DoubleRootIsFoundOnce) {
  const auto r = real_roots(from_roots({0.3, 0.3, 0.7}), 0.0, 1.0);
  ASSERT_EQ(r.size(), 2u);
  EXPECT_NEAR(r[0], 0.3, 1e-7);
  EXPECT_NEAR(r[1], 0.7, 1e-12);
}

TEST(Polynomial, NoRealRoots) {
  EXPECT_TRUE(real_roots(Polynomial<double>{1.0, 0.0, 1.0}, -5.0, 5.0).empty());
}

TEST(Polynomial, RandomProductsRecoverTheirRoots) {
  std::mt19937 gen(7);
  std::uniform_real_distribution<double> R(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> roots;
    const int n = 1 + trial % 6;
    for (int k = 0; k < n; ++k) roots.push_back(R(gen));
    std::sort(roots.begin(), roots.end());
    bool separated = true;
    for (int k = 1; k < n; ++k) separated = separated && roots[k] - roots[k - 1] > 1e-3;
    if (!separated) continue;
    const auto p = from_roots(roots) * 2.5;
    const auto found = real_roots(p, -0.01, 1.01);
    ASSERT_EQ(found.size(), roots.size()) << "trial " << trial;
    for (int k = 0; k < n; ++k) EXPECT_NEAR(found[k], roots[k], 1e-9);
  }
}

TEST(Polynomial, JetCoefficientsEvaluatePointwise) {
  const isomin::Jet u = isomin::Jet::variable(0.4, 0, 3);
  const Polynomial<isomin::Jet> p{u, isomin::Jet(2.0, 3), square(u)};
  const isomin::Jet s = isomin::Jet::variable(0.1, 1, 3);
  const isomin::Jet val = p(s);
  // u + 2 s + u^2 s^2
  EXPECT_NEAR(val.value(), 0.4 + 0.2 + 0.16 * 0.01, 1e-15);
  EXPECT_NEAR(val.partial(1, 0), 1 + 2 * 0.4 * 0.01, 1e-14);
  EXPECT_NEAR(val.partial(0, 1), 2 + 2 * 0.16 * 0.1, 1e-14);
  EXPECT_NEAR(val.partial(1, 1), 4 * 0.4 * 0.1, 1e-14);
}
