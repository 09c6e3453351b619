#pragma once

#include <array>
#include <functional>
#include <utility>

#include "isomin/jet.hpp"

namespace isomin {

struct ChartPoint {
  double u = 0.0;
  double v = 0.0;
};

struct Rect {
  double u_min = 0.0;
  double u_max = 0.0;
  double v_min = 0.0;
  double v_max = 0.0;

  bool contains(ChartPoint p) const {
    return p.u >= u_min && p.u <= u_max && p.v >= v_min && p.v <= v_max;
  }
};

// A real-analytic function on a chart, evaluated as a Taylor jet at a point.
class ScalarField {
 public:
  using PointFn = std::function<Jet(double u, double v, int order)>;

  ScalarField() = default;
  explicit ScalarField(PointFn fn) : fn_(std::move(fn)) {}

  // Wraps a closure f(const Jet& u, const Jet& v) -> Jet built from jet
  // arithmetic; every partial up to kMaxJetOrder then comes for free.
  template <class F>
  static ScalarField analytic(F f) {
    return ScalarField([f](double u, double v, int order) {
      return Jet(f(Jet::variable(u, 0, order), Jet::variable(v, 1, order)));
    });
  }

  static ScalarField constant(double x) {
    return ScalarField([x](double, double, int order) { return Jet(x, order); });
  }

  Jet jet(double u, double v, int order) const { return fn_(u, v, order); }
  Jet jet(ChartPoint p, int order) const { return fn_(p.u, p.v, order); }
  double operator()(double u, double v) const { return fn_(u, v, 0).value(); }
  double operator()(ChartPoint p) const { return fn_(p.u, p.v, 0).value(); }

  ScalarField negated() const {
    auto fn = fn_;
    return ScalarField([fn](double u, double v, int order) { return -fn(u, v, order); });
  }

  explicit operator bool() const { return static_cast<bool>(fn_); }

 private:
  PointFn fn_;
};

enum class ChartKind { WarpedProduct, Conformal };

// Scale factors of the diagonal metric P^2 du^2 + R^2 dv^2.
struct ScaleFactors {
  Jet P;
  Jet R;
};

// du^2 + L(u)^2 dv^2 (warped product) or l(u,v)^2 (du^2 + dv^2) (conformal)
// on a closed rectangle, together with the curvature c of the ambient base.
class MetricChart {
 public:
  static MetricChart warped_product(ScalarField profile, Rect domain, double c);
  static MetricChart conformal(ScalarField factor, Rect domain, double c);

  ChartKind kind() const { return kind_; }
  const Rect& domain() const { return domain_; }
  double c() const { return c_; }
  const ScalarField& profile() const { return profile_; }

  MetricChart with_domain(Rect domain) const;
  MetricChart with_c(double c) const;

  // Throws DomainError when p is outside the rectangle.
  void require_inside(ChartPoint p) const;
  ScaleFactors scale_factors(ChartPoint p, int order) const;

 private:
  MetricChart(ChartKind kind, ScalarField profile, Rect domain, double c);
  void validate() const;

  ChartKind kind_ = ChartKind::WarpedProduct;
  ScalarField profile_;
  Rect domain_;
  double c_ = -1.0;
};

// Orthonormal frame e1 = (1/P) d/du, e2 = (1/R) d/dv with its connection form
// (nabla_X e_i = alpha(X) J e_i, J e1 = e2) as jets about a point. P and R
// carry the requested order; alpha one less.
struct LocalFrame {
  ChartPoint at;
  Jet P;
  Jet R;
  Jet alpha1;
  Jet alpha2;

  Jet d1(const Jet& f) const { return f.d_du() / P; }
  Jet d2(const Jet& f) const { return f.d_dv() / R; }
  // Gauss curvature as a jet (order of P minus two).
  Jet curvature() const;
};

LocalFrame local_frame(const MetricChart& chart, ChartPoint p, int order);

struct FramePoint {
  ChartPoint at;
  double alpha1 = 0.0;
  double alpha2 = 0.0;
  std::array<double, 2> e1_coords{};  // (du, dv) coefficients of e1
  std::array<double, 2> e2_coords{};
};

// Frame derivatives and covariant Hessian of a scalar in (e1, e2):
// f_ij = e_j . f_i - (nabla_{e_j} e_i) . f. f12 and f21 are computed by the
// two routes separately; they agree by symmetry of the Hessian.
struct FrameDerivatives {
  double f = 0.0;
  double f1 = 0.0;
  double f2 = 0.0;
  double f11 = 0.0;
  double f12 = 0.0;
  double f21 = 0.0;
  double f22 = 0.0;
};

// First frame derivatives of f as jets of the given order.
struct FrameGradientJets {
  Jet f;
  Jet f1;
  Jet f2;
};

struct CurvatureJet {
  double K = 0.0;
  std::array<double, 2> gradK_frame{};  // (K1, K2) in (e1, e2)
  double normGradK = 0.0;
  // Natural-frame Hessian (h11, h12, h22) and grad(Delta K).
  std::array<double, 3> hessK_frame{};
  std::array<double, 2> grad_lapK_frame{};
  double lapK = 0.0;

  // Gradient frame (grad K, J grad K) / |grad K|; valid only if
  // gradient_defined. direction is grad K / |grad K| in (e1, e2).
  bool gradient_defined = false;
  std::array<double, 2> direction{};
  double K11 = 0.0;
  double K22 = 0.0;
  double K12 = 0.0;
  double lapK_2 = 0.0;
};

// Gradient-frame quantities as jets (for derivatives along the chart).
struct GradientFrameJets {
  Jet K;
  Jet K1;
  Jet K11;
  Jet K22;
  Jet K12;
  Jet lapK;
  Jet lapK_2;
};

inline constexpr double kDefaultGradEps = 1e-10;

double curvature(const MetricChart& chart, ChartPoint p);
FramePoint frame_at(const MetricChart& chart, ChartPoint p);
CurvatureJet curvature_jet(const MetricChart& chart, ChartPoint p, double grad_eps = kDefaultGradEps);
// Requires grad K != 0 at p (UndefinedError otherwise). `order` may be at most
// kMaxJetOrder - 5.
GradientFrameJets gradient_frame_jets(const MetricChart& chart, ChartPoint p, int order,
                                      double grad_eps = kDefaultGradEps);
FrameDerivatives scalar_derivatives(const MetricChart& chart, const ScalarField& f, ChartPoint p);
FrameGradientJets frame_gradient(const MetricChart& chart, const ScalarField& f, ChartPoint p, int order);

}  // namespace isomin
