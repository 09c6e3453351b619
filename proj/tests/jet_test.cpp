#include <gtest/gtest.h>

#include <cmath>

#include "fd_oracle.hpp"
#include "isomin/jet.hpp"

using isomin::Jet;

namespace {

Jet U(double u, int order = isomin::kMaxJetOrder) { return Jet::variable(u, 0, order); }
Jet V(double v, int order = isomin::kMaxJetOrder) { return Jet::variable(v, 1, order); }

double factorial(int n) { return n <= 1 ? 1.0 : n * factorial(n - 1); }

}  // namespace

TEST(Jet, ProductOfExpAndSinHasClosedFormPartials) {
  const double u = 0.3, v = -0.7;
  const Jet f = exp(U(u)) * sin(V(v));
  // d^i/du^i d^j/dv^j e^u sin v = e^u sin(v + j pi/2)
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; j + i <= 6; ++j)
      EXPECT_NEAR(f.partial(i, j), std::exp(u) * std::sin(v + j * M_PI / 2), 1e-13) << i << "," << j;
}

TEST(Jet, CoeffIsScaledPartial) {
  const Jet f = cosh(2.0 * U(0.4)) * V(1.5);
  EXPECT_NEAR(f.coeff(3, 1), f.partial(3, 1) / (factorial(3) * factorial(1)), 1e-14);
  EXPECT_NEAR(f.partial(3, 1), 8 * std::sinh(0.8), 1e-12);
}

TEST(Jet, ElementaryIdentities) {
  const Jet x = 1.3 + 0.4 * U(0.2) * V(-0.5) + square(U(0.2));
  const Jet checks[] = {
      square(sin(x)) + square(cos(x)) - 1.0,
      square(cosh(x)) - square(sinh(x)) - 1.0,
      exp(log(x)) - x,
      square(sqrt(x)) - x,
      pow(x, 2.5) - square(x) * sqrt(x),
      reciprocal(x) * x - 1.0,
      (x / (x + 1.0)) * (x + 1.0) - x,
  };
  for (const Jet& z : checks)
    for (int i = 0; i <= 6; ++i)
      for (int j = 0; i + j <= 6; ++j) EXPECT_NEAR(z.coeff(i, j), 0.0, 1e-11) << i << "," << j;
}

TEST(Jet, MatchesFiniteDifferenceOracle) {
  auto g = [](const auto& u, const auto& v) { return sqrt(1.0 + u * u * v) / cos(u); };
  fd::Fn2 plain = [](double u, double v) { return std::sqrt(1 + u * u * v) / std::cos(u); };
  const double u = 0.35, v = 0.8;
  const Jet f = g(U(u), V(v));
  EXPECT_NEAR(f.value(), plain(u, v), 1e-15);
  EXPECT_NEAR(f.partial(1, 0), fd::du(plain, u, v), 1e-9);
  EXPECT_NEAR(f.partial(0, 1), fd::dv(plain, u, v), 1e-9);
  EXPECT_NEAR(f.partial(1, 1), fd::du(fd::dv_fn(plain, 2e-3), u, v, 2e-3), 1e-7);
  EXPECT_NEAR(f.partial(2, 0), fd::du(fd::du_fn(plain, 2e-3), u, v, 2e-3), 1e-7);
}

TEST(Jet, MixedOrdersTruncateToTheSmaller) {
  const Jet a = U(0.1, 4);
  const Jet b = V(0.2, 2);
  EXPECT_EQ((a * b).order(), 2);
  EXPECT_EQ((a + 1.0).order(), 4);
  EXPECT_EQ(a.d_du().order(), 3);
  EXPECT_EQ(a.truncated(1).order(), 1);
  const Jet c(2.0);
  EXPECT_EQ((c * a).order(), 4);
}

TEST(Jet, DifferentiationShiftsCoefficients) {
  const Jet f = exp(U(0.0) + 2.0 * V(0.0));
  const Jet fv = f.d_dv();
  for (int i = 0; i <= 5; ++i)
    for (int j = 0; i + j <= 5; ++j) EXPECT_NEAR(fv.partial(i, j), f.partial(i, j + 1), 1e-12);
}

TEST(Jet, ZeroOrderIsPlainArithmetic) {
  const Jet f = sin(U(0.7, 0)) * 3.0 + 1.0;
  EXPECT_EQ(f.order(), 0);
  EXPECT_DOUBLE_EQ(f.value(), 3 * std::sin(0.7) + 1);
}
