#include "isomin/angle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "isomin/errors.hpp"

namespace isomin {

double m1_residual(double K, double c, double nu, double nu1, double nu2) {
  return nu1 * nu1 + nu2 * nu2 + (1.0 - nu * nu) * (K - c * nu * nu);
}

double m2_residual(double K, double c, double nu, double lap_nu) {
  return lap_nu - 2.0 * K * nu + c * (1.0 + nu * nu) * nu;
}

double m3_residual(double K, double grad_K_sq, double lap_K, double c, double nu, double grad_nu_dot_grad_K) {
  const double k_minus = K - c * nu * nu;
  const double rhs = grad_K_sq - k_minus * lap_K + 4.0 * (K - c) * k_minus * (K + 2.0 * c * nu * nu);
  return 6.0 * c * nu * grad_nu_dot_grad_K - rhs;
}

double ricci_residual(double K, double grad_K_sq, double lap_K) {
  return grad_K_sq - K * lap_K + 4.0 * K * K * K;
}

namespace {

void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) throw EvaluationError(std::string(what) + " is not finite");
}

}  // namespace

double residual_M1(const AngleField& field, ChartPoint p) {
  const FrameGradientJets g = frame_gradient(field.chart, field.nu, p, 0);
  const double K = curvature(field.chart, p);
  const double r = m1_residual(K, field.chart.c(), g.f.value(), g.f1.value(), g.f2.value());
  require_finite(r, "M1 residual");
  return r;
}

double residual_M2(const AngleField& field, ChartPoint p) {
  const FrameDerivatives d = scalar_derivatives(field.chart, field.nu, p);
  const double K = curvature(field.chart, p);
  const double r = m2_residual(K, field.chart.c(), d.f, d.f11 + d.f22);
  require_finite(r, "M2 residual");
  return r;
}

double residual_M3(const AngleField& field, ChartPoint p) {
  const CurvatureJet j = curvature_jet(field.chart, p);
  const FrameGradientJets g = frame_gradient(field.chart, field.nu, p, 0);
  const double dot = g.f1.value() * j.gradK_frame[0] + g.f2.value() * j.gradK_frame[1];
  const double r = m3_residual(j.K, j.normGradK * j.normGradK, j.lapK, field.chart.c(), g.f.value(), dot);
  require_finite(r, "M3 residual");
  return r;
}

double residual_ricci(const MetricChart& chart, ChartPoint p) {
  const CurvatureJet j = curvature_jet(chart, p);
  return ricci_residual(j.K, j.normGradK * j.normGradK, j.lapK);
}

double ricci_reduction_gap(const MetricChart& chart, ChartPoint p) {
  const CurvatureJet j = curvature_jet(chart, p);
  const double g2 = j.normGradK * j.normGradK;
  // nu and <grad nu, grad K> drop out at c = 0; any value shows it.
  const double reduced = -m3_residual(j.K, g2, j.lapK, 0.0, 0.5, 1.0);
  return reduced - ricci_residual(j.K, g2, j.lapK);
}

E2Residuals e2_residuals(const AngleField& field, ChartPoint p, double grad_nu_eps) {
  const FrameDerivatives d = scalar_derivatives(field.chart, field.nu, p);
  E2Residuals out;
  if (std::hypot(d.f1, d.f2) < grad_nu_eps) return out;
  const CurvatureJet j = curvature_jet(field.chart, p);
  const double c = field.chart.c();
  const double nu = d.f;
  const double k1 = j.gradK_frame[0];
  const double k2 = j.gradK_frame[1];
  const double k_minus = j.K - c * nu * nu;
  out.defined = true;
  out.r22 = 2.0 * k_minus * d.f12 - (k1 * d.f2 + k2 * d.f1 - 6.0 * c * nu * d.f1 * d.f2);
  out.r23 = k_minus * (d.f11 - d.f22) -
            (-3.0 * c * nu * (d.f1 * d.f1 - d.f2 * d.f2) + k1 * d.f1 - k2 * d.f2);
  require_finite(out.r22, "E2-2 residual");
  require_finite(out.r23, "E2-3 residual");
  return out;
}

ObstructionCoeffs obstruction_coeffs(const CurvatureJet& jet, double c) {
  if (!jet.gradient_defined) throw UndefinedError("obstruction undefined: grad K = 0");
  const auto p = obstruction_polynomials<double>(jet.K, jet.normGradK, jet.K11, jet.K22, jet.K12, jet.lapK,
                                                 jet.lapK_2, c);
  return {p.A, p.E, p.F, p.Q};
}

namespace {

// Magnitude a non-degenerate Q would have at this jet; Q is homogeneous of
// degree 8 in curvature units (K ~ c ~ length^-2).
double degeneracy_reference(const CurvatureJet& j, double c) {
  const double m = std::max({1.0, std::abs(j.K), std::abs(c), j.normGradK, std::abs(j.lapK), std::abs(j.K11),
                             std::abs(j.K22), std::abs(j.K12), std::abs(j.lapK_2)});
  return std::pow(m, 8.0);
}

std::vector<double> root_squares(const ObstructionCoeffs& q, const CurvatureJet& jet, double c) {
  const double scale = q.scale();
  if (!std::isfinite(scale)) throw EvaluationError("obstruction polynomial is not finite");
  if (scale <= 1e-13 * degeneracy_reference(jet, c)) {
    throw DegeneratePointError("degenerate point: obstruction polynomial vanishes identically");
  }
  return real_roots(q.Q, 0.0, 1.0);
}

std::vector<double> signed_roots(const std::vector<double>& squares) {
  std::vector<double> out;
  for (double s : squares) {
    if (s <= 0.0) {
      out.push_back(0.0);
      continue;
    }
    const double r = std::sqrt(s);
    out.push_back(r);
    out.push_back(-r);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<double> raw_candidate_angles(const CurvatureJet& jet, double c) {
  return signed_roots(root_squares(obstruction_coeffs(jet, c), jet, c));
}

PropagatedGradient propagate_gradient(const CurvatureJet& jet, double c, double nu, PropagationHint hint) {
  if (!jet.gradient_defined) throw UndefinedError("propagation undefined: grad K = 0");
  if (std::abs(nu) < kPropagationNuGuard) throw SingularPropagationError("singular propagation: nu vanishes");
  const ObstructionCoeffs q = obstruction_coeffs(jet, c);
  const double s = nu * nu;
  const double k1 = jet.normGradK;
  PropagatedGradient g;
  g.nu1 = q.A(s) / (6.0 * c * nu * k1);
  if (hint == PropagationHint::WarpedChart) {
    g.nu2 = 0.0;
  } else {
    const double F = q.F(s);
    const double f_scale = std::max(std::abs(q.F[0]), std::abs(q.F[1]));
    if (std::abs(F) <= 1e-12 * f_scale || F == 0.0) {
      throw SingularPropagationError("singular propagation: F vanishes");
    }
    g.nu2 = -nu * q.E(s) / (k1 * F);
  }
  if (!std::isfinite(g.nu1) || !std::isfinite(g.nu2)) {
    throw SingularPropagationError("singular propagation: non-finite gradient");
  }
  return g;
}

std::array<double, 2> to_chart_frame(const CurvatureJet& jet, const PropagatedGradient& g) {
  const double n1 = jet.direction[0];
  const double n2 = jet.direction[1];
  // e1' = n, e2' = J n = (-n2, n1)
  return {g.nu1 * n1 - g.nu2 * n2, g.nu1 * n2 + g.nu2 * n1};
}

std::vector<double> CandidateReport::admissible() const {
  std::vector<double> out;
  for (const auto& c : candidates)
    if (c.admissible) out.push_back(c.nu);
  return out;
}

std::vector<double> CandidateReport::raw() const {
  std::vector<double> out;
  for (const auto& c : candidates) out.push_back(c.nu);
  return out;
}

CandidateReport candidate_angles(const MetricChart& chart, ChartPoint p, const CandidateOptions& options) {
  CandidateReport report;
  report.at = p;
  report.jet = curvature_jet(chart, p, options.grad_eps);
  if (!report.jet.gradient_defined) throw UndefinedError("degenerate: grad K = 0 (gradient frame undefined)");
  const double c = chart.c();
  report.coeffs = obstruction_coeffs(report.jet, c);
  const std::vector<double> nus = signed_roots(root_squares(report.coeffs, report.jet, c));

  // Q with coefficients as first-order jets in (u, v): the branch s*(u, v)
  // satisfies Q_x + Q_s ds* = 0.
  const GradientFrameJets gj = gradient_frame_jets(chart, p, 1, options.grad_eps);
  const auto qj = obstruction_polynomials<Jet>(gj.K, gj.K1, gj.K11, gj.K22, gj.K12, gj.lapK, gj.lapK_2, c);
  const Polynomial<double> dq = report.coeffs.Q.derivative();
  const ScaleFactors sf = chart.scale_factors(p, 0);
  const PropagationHint hint =
      chart.kind() == ChartKind::WarpedProduct ? PropagationHint::WarpedChart : PropagationHint::General;
  const double K = report.jet.K;

  for (double nu : nus) {
    Candidate cand;
    cand.nu = nu;
    try {
      const PropagatedGradient g = propagate_gradient(report.jet, c, nu, hint);
      cand.grad_propagated = to_chart_frame(report.jet, g);
      cand.m1_propagated = m1_residual(K, c, nu, cand.grad_propagated[0], cand.grad_propagated[1]);
    } catch (const SingularPropagationError& e) {
      cand.rejection = e.what();
      report.candidates.push_back(cand);
      continue;
    }
    const double s = nu * nu;
    const double qs = dq(s);
    // Q' against its rounding bound at s.
    double qs_scale = 0.0;
    double sk = 1.0;
    for (std::size_t k = 1; k < report.coeffs.Q.size(); ++k, sk *= s) {
      qs_scale += static_cast<double>(k) * std::abs(report.coeffs.Q[k]) * sk;
    }
    if (std::abs(qs) <= 1e-10 * qs_scale) {
      cand.rejection = "multiple root: branch gradient undefined";
      report.candidates.push_back(cand);
      continue;
    }
    const Jet qx = qj.Q(s);
    const double ds_du = -qx.coeff(1, 0) / qs;
    const double ds_dv = -qx.coeff(0, 1) / qs;
    cand.grad_branch = {ds_du / (2.0 * nu * sf.P.value()), ds_dv / (2.0 * nu * sf.R.value())};
    cand.m1_branch = m1_residual(K, c, nu, cand.grad_branch[0], cand.grad_branch[1]);

    const double gnorm = std::hypot(cand.grad_propagated[0], cand.grad_propagated[1]);
    const double mismatch = std::hypot(cand.grad_branch[0] - cand.grad_propagated[0],
                                       cand.grad_branch[1] - cand.grad_propagated[1]);
    std::ostringstream why;
    if (!(std::abs(cand.m1_propagated) <= options.m1_tol)) {
      why << "M1 fails with propagated gradient (" << cand.m1_propagated << ")";
    } else if (!(std::abs(cand.m1_branch) <= options.m1_tol)) {
      why << "M1 fails along the root branch (" << cand.m1_branch << ")";
    } else if (!(mismatch <= options.grad_match_tol * std::max(1.0, gnorm))) {
      why << "branch gradient disagrees with propagated gradient (" << mismatch << ")";
    }
    cand.rejection = why.str();
    cand.admissible = cand.rejection.empty();
    report.candidates.push_back(cand);
  }
  return report;
}

}  // namespace isomin
