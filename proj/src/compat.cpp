#include "isomin/compat.hpp"

#include <cmath>

#include "isomin/errors.hpp"

namespace isomin {

namespace {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

// nabla_X W for W = w1 e1 + w2 e2, given X.w1, X.w2 and alpha(X):
// nabla_X e1 = alpha(X) e2, nabla_X e2 = -alpha(X) e1.
Vec2 covariant(double dw1, double dw2, double w1, double w2, double alpha_x) {
  return {dw1 - w2 * alpha_x, dw2 + w1 * alpha_x};
}

}  // namespace

CompatibilityResiduals check_compatibility(const GaussCodazziData& data, ChartPoint p) {
  const MetricChart& chart = data.chart;
  const LocalFrame fr = local_frame(chart, p, 2);
  const double K = fr.curvature().value();
  const double a1 = fr.alpha1.value();
  const double a2 = fr.alpha2.value();

  const Jet nu = data.nu.jet(p, 1);
  const Jet t1 = data.T1.jet(p, 1);
  const Jet t2 = data.T2.jet(p, 1);
  const Jet s1 = data.s1.jet(p, 1);
  const Jet s2 = data.s2.jet(p, 1);
  for (const Jet* j : {&nu, &t1, &t2, &s1, &s2}) {
    if (!std::isfinite(j->value())) throw EvaluationError("Gauss-Codazzi data is not finite");
  }

  const double c = chart.c();
  const double n = nu.value();
  const double T1 = t1.value();
  const double T2 = t2.value();
  const double S1 = s1.value();
  const double S2 = s2.value();
  auto e1 = [&](const Jet& f) { return fr.d1(f).value(); };
  auto e2 = [&](const Jet& f) { return fr.d2(f).value(); };

  CompatibilityResiduals r;
  r.c1 = K - (-S1 * S1 - S2 * S2) - c * n * n;

  // S e1 = (s1, s2), S e2 = (s2, -s1), [e1, e2] = -alpha1 e1 - alpha2 e2.
  const Vec2 d1_se2 = covariant(e1(s2), -e1(s1), S2, -S1, a1);
  const Vec2 d2_se1 = covariant(e2(s1), e2(s2), S1, S2, a2);
  const Vec2 s_bracket{-a1 * S1 - a2 * S2, -a1 * S2 + a2 * S1};
  // c nu (<e2, T> e1 - <e1, T> e2)
  const Vec2 rhs{c * n * T2, -c * n * T1};
  const double cod_x = d1_se2.x - d2_se1.x - s_bracket.x - rhs.x;
  const double cod_y = d1_se2.y - d2_se1.y - s_bracket.y - rhs.y;
  r.c2 = std::max(std::abs(cod_x), std::abs(cod_y));

  const Vec2 d1_t = covariant(e1(t1), e1(t2), T1, T2, a1);
  const Vec2 d2_t = covariant(e2(t1), e2(t2), T1, T2, a2);
  const double c3_1 = std::hypot(d1_t.x - n * S1, d1_t.y - n * S2);
  const double c3_2 = std::hypot(d2_t.x - n * S2, d2_t.y + n * S1);
  r.c3 = std::max(c3_1, c3_2);

  const double c4_1 = e1(nu) + S1 * T1 + S2 * T2;
  const double c4_2 = e2(nu) + S2 * T1 - S1 * T2;
  r.c4 = std::max(std::abs(c4_1), std::abs(c4_2));

  r.c5 = T1 * T1 + T2 * T2 + n * n - 1.0;
  return r;
}

}  // namespace isomin
