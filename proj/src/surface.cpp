#include "isomin/surface.hpp"

#include <cmath>
#include <sstream>

#include "isomin/errors.hpp"

namespace isomin {

MetricChart::MetricChart(ChartKind kind, ScalarField profile, Rect domain, double c)
    : kind_(kind), profile_(std::move(profile)), domain_(domain), c_(c) {}

MetricChart MetricChart::warped_product(ScalarField profile, Rect domain, double c) {
  MetricChart chart(ChartKind::WarpedProduct, std::move(profile), domain, c);
  chart.validate();
  return chart;
}

MetricChart MetricChart::conformal(ScalarField factor, Rect domain, double c) {
  MetricChart chart(ChartKind::Conformal, std::move(factor), domain, c);
  chart.validate();
  return chart;
}

MetricChart MetricChart::with_domain(Rect domain) const {
  MetricChart chart(kind_, profile_, domain, c_);
  chart.validate();
  return chart;
}

MetricChart MetricChart::with_c(double c) const {
  MetricChart chart(kind_, profile_, domain_, c);
  chart.validate();
  return chart;
}

void MetricChart::validate() const {
  if (c_ == 0.0 || !std::isfinite(c_)) throw DomainError("ambient curvature c must be finite and non-zero");
  if (!(domain_.u_min < domain_.u_max) || !(domain_.v_min < domain_.v_max)) {
    throw DomainError("chart rectangle is empty");
  }
  if (!profile_) throw DomainError("chart has no metric profile");
  constexpr int kSamples = 17;
  for (int i = 0; i < kSamples; ++i) {
    for (int j = 0; j < kSamples; ++j) {
      const double u = domain_.u_min + (domain_.u_max - domain_.u_min) * i / (kSamples - 1);
      const double v = domain_.v_min + (domain_.v_max - domain_.v_min) * j / (kSamples - 1);
      const double x = profile_(u, v);
      if (!(x > 0.0) || !std::isfinite(x)) {
        std::ostringstream os;
        os << "metric profile not positive at (" << u << ", " << v << "): " << x;
        throw DomainError(os.str());
      }
    }
  }
}

void MetricChart::require_inside(ChartPoint p) const {
  // Closed rectangle; a little slack absorbs grid round-off at the edges.
  const double su = 1e-12 * (1.0 + std::abs(domain_.u_max - domain_.u_min));
  const double sv = 1e-12 * (1.0 + std::abs(domain_.v_max - domain_.v_min));
  if (p.u < domain_.u_min - su || p.u > domain_.u_max + su || p.v < domain_.v_min - sv ||
      p.v > domain_.v_max + sv || !std::isfinite(p.u) || !std::isfinite(p.v)) {
    std::ostringstream os;
    os << "point (" << p.u << ", " << p.v << ") outside chart domain [" << domain_.u_min << ", "
       << domain_.u_max << "] x [" << domain_.v_min << ", " << domain_.v_max << "]";
    throw DomainError(os.str());
  }
}

ScaleFactors MetricChart::scale_factors(ChartPoint p, int order) const {
  Jet f = profile_.jet(p, order);
  if (!std::isfinite(f.value())) throw EvaluationError("metric profile is not finite");
  if (kind_ == ChartKind::WarpedProduct) return {Jet(1.0, order), f};
  return {f, f};
}

Jet LocalFrame::curvature() const {
  // K = -1/(PR) [ (R_u / P)_u + (P_v / R)_v ]
  const Jet a = (R.d_du() / P).d_du();
  const Jet b = (P.d_dv() / R).d_dv();
  return -(a + b) / (P * R);
}

LocalFrame local_frame(const MetricChart& chart, ChartPoint p, int order) {
  chart.require_inside(p);
  const ScaleFactors s = chart.scale_factors(p, order);
  LocalFrame f;
  f.at = p;
  f.P = s.P;
  f.R = s.R;
  if (order >= 1) {
    const Jet pr = s.P * s.R;
    f.alpha1 = -s.P.d_dv() / pr;
    f.alpha2 = s.R.d_du() / pr;
  }
  return f;
}

double curvature(const MetricChart& chart, ChartPoint p) {
  const double K = local_frame(chart, p, 2).curvature().value();
  if (!std::isfinite(K)) throw EvaluationError("curvature is not finite");
  return K;
}

FramePoint frame_at(const MetricChart& chart, ChartPoint p) {
  const LocalFrame f = local_frame(chart, p, 1);
  FramePoint out;
  out.at = p;
  out.alpha1 = f.alpha1.value();
  out.alpha2 = f.alpha2.value();
  out.e1_coords = {1.0 / f.P.value(), 0.0};
  out.e2_coords = {0.0, 1.0 / f.R.value()};
  return out;
}

namespace {

// Natural-frame derivatives of K as jets; `extra` is the order retained on
// the highest quantity (grad Delta K).
struct NaturalCurvatureJets {
  Jet K;
  Jet K1;
  Jet K2;
  Jet h11;
  Jet h12;
  Jet h22;
  Jet lap;
  Jet gl1;
  Jet gl2;
};

NaturalCurvatureJets natural_curvature_jets(const MetricChart& chart, ChartPoint p, int extra) {
  const LocalFrame f = local_frame(chart, p, 5 + extra);
  NaturalCurvatureJets n;
  n.K = f.curvature();
  n.K1 = f.d1(n.K);
  n.K2 = f.d2(n.K);
  n.h11 = f.d1(n.K1) - f.alpha1 * n.K2;
  n.h12 = f.d2(n.K1) - f.alpha2 * n.K2;
  n.h22 = f.d2(n.K2) + f.alpha2 * n.K1;
  n.lap = n.h11 + n.h22;
  n.gl1 = f.d1(n.lap);
  n.gl2 = f.d2(n.lap);
  if (!std::isfinite(n.K.value()) || !std::isfinite(n.gl1.value()) || !std::isfinite(n.gl2.value())) {
    throw EvaluationError("curvature derivatives are not finite");
  }
  return n;
}

double grad_threshold(double K, double grad_eps) { return grad_eps * (1.0 + std::abs(K)); }

}  // namespace

CurvatureJet curvature_jet(const MetricChart& chart, ChartPoint p, double grad_eps) {
  const NaturalCurvatureJets n = natural_curvature_jets(chart, p, 0);
  CurvatureJet j;
  j.K = n.K.value();
  const double k1 = n.K1.value();
  const double k2 = n.K2.value();
  j.gradK_frame = {k1, k2};
  j.normGradK = std::hypot(k1, k2);
  const double h11 = n.h11.value();
  const double h12 = n.h12.value();
  const double h22 = n.h22.value();
  j.hessK_frame = {h11, h12, h22};
  j.lapK = n.lap.value();
  j.grad_lapK_frame = {n.gl1.value(), n.gl2.value()};
  j.gradient_defined = j.normGradK >= grad_threshold(j.K, grad_eps);
  if (j.gradient_defined) {
    const double g = j.normGradK;
    const double n1 = k1 / g;
    const double n2 = k2 / g;
    j.direction = {n1, n2};
    j.K11 = n1 * n1 * h11 + 2.0 * n1 * n2 * h12 + n2 * n2 * h22;
    j.K22 = n2 * n2 * h11 - 2.0 * n1 * n2 * h12 + n1 * n1 * h22;
    j.K12 = n1 * n2 * (h22 - h11) + (n1 * n1 - n2 * n2) * h12;
    j.lapK_2 = -n2 * j.grad_lapK_frame[0] + n1 * j.grad_lapK_frame[1];
  }
  return j;
}

GradientFrameJets gradient_frame_jets(const MetricChart& chart, ChartPoint p, int order, double grad_eps) {
  const NaturalCurvatureJets n = natural_curvature_jets(chart, p, order);
  const Jet g2 = n.K1 * n.K1 + n.K2 * n.K2;
  if (std::sqrt(g2.value()) < grad_threshold(n.K.value(), grad_eps)) {
    throw UndefinedError("gradient frame undefined: grad K = 0");
  }
  const Jet g = sqrt(g2);
  const Jet n1 = n.K1 / g;
  const Jet n2 = n.K2 / g;
  GradientFrameJets j;
  j.K = n.K.truncated(order);
  j.K1 = g.truncated(order);
  j.K11 = (n1 * n1 * n.h11 + 2.0 * n1 * n2 * n.h12 + n2 * n2 * n.h22).truncated(order);
  j.K22 = (n2 * n2 * n.h11 - 2.0 * n1 * n2 * n.h12 + n1 * n1 * n.h22).truncated(order);
  j.K12 = (n1 * n2 * (n.h22 - n.h11) + (n1 * n1 - n2 * n2) * n.h12).truncated(order);
  j.lapK = n.lap.truncated(order);
  j.lapK_2 = (n1 * n.gl2 - n2 * n.gl1).truncated(order);
  return j;
}

FrameDerivatives scalar_derivatives(const MetricChart& chart, const ScalarField& f, ChartPoint p) {
  const LocalFrame fr = local_frame(chart, p, 2);
  const Jet x = f.jet(p, 2);
  if (!std::isfinite(x.value())) throw EvaluationError("scalar field is not finite");
  const Jet x1 = fr.d1(x);
  const Jet x2 = fr.d2(x);
  FrameDerivatives d;
  d.f = x.value();
  d.f1 = x1.value();
  d.f2 = x2.value();
  d.f11 = (fr.d1(x1) - fr.alpha1 * x2).value();
  d.f12 = (fr.d2(x1) - fr.alpha2 * x2).value();
  d.f21 = (fr.d1(x2) + fr.alpha1 * x1).value();
  d.f22 = (fr.d2(x2) + fr.alpha2 * x1).value();
  return d;
}

FrameGradientJets frame_gradient(const MetricChart& chart, const ScalarField& f, ChartPoint p, int order) {
  const LocalFrame fr = local_frame(chart, p, order + 1);
  const Jet x = f.jet(p, order + 1);
  if (!std::isfinite(x.value())) throw EvaluationError("scalar field is not finite");
  return {x.truncated(order), fr.d1(x), fr.d2(x)};
}

}  // namespace isomin
