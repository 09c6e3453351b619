#pragma once

#include <array>
#include <string>
#include <vector>

#include "isomin/polynomial.hpp"
#include "isomin/surface.hpp"

namespace isomin {

// Candidate angle function nu: chart -> [-1, 1].
struct AngleField {
  MetricChart chart;
  ScalarField nu;
};

// Pointwise algebraic forms. Each returns LHS - RHS of its equation.
//   M1: |grad nu|^2 + (1 - nu^2)(K - c nu^2)
//   M2: Delta nu - 2 K nu + c (1 + nu^2) nu
//   M3: 6 c nu <grad nu, grad K> - (|grad K|^2 - (K - c nu^2) Delta K
//                                 + 4 (K - c)(K - c nu^2)(K + 2 c nu^2))
//   Ricci: |grad K|^2 - K Delta K + 4 K^3
double m1_residual(double K, double c, double nu, double nu1, double nu2);
double m2_residual(double K, double c, double nu, double lap_nu);
double m3_residual(double K, double grad_K_sq, double lap_K, double c, double nu, double grad_nu_dot_grad_K);
double ricci_residual(double K, double grad_K_sq, double lap_K);

double residual_M1(const AngleField& field, ChartPoint p);
double residual_M2(const AngleField& field, ChartPoint p);
double residual_M3(const AngleField& field, ChartPoint p);
double residual_ricci(const MetricChart& chart, ChartPoint p);
// (RHS - LHS of M3 at c = 0) minus the Ricci residual, at the chart's jet.
double ricci_reduction_gap(const MetricChart& chart, ChartPoint p);

struct E2Residuals {
  bool defined = false;  // false where grad nu vanishes
  double r22 = 0.0;
  double r23 = 0.0;
};

inline constexpr double kDefaultGradNuEps = 1e-10;

// Second-order frame equations in the chart's own frame (e1, e2).
E2Residuals e2_residuals(const AngleField& field, ChartPoint p, double grad_nu_eps = kDefaultGradNuEps);

// Polynomials in s = nu^2 whose coefficients are curvature data at one point.
template <class T>
struct ObstructionPolynomials {
  Polynomial<T> A;  // degree 2
  Polynomial<T> E;  // degree 2
  Polynomial<T> F;  // degree 1
  Polynomial<T> Q;  // degree <= 6; Q(nu^2) = 0 along any angle function
};

template <class T>
ObstructionPolynomials<T> obstruction_polynomials(const T& K, const T& K1, const T& K11, const T& K22,
                                                  const T& K12, const T& lapK, const T& lapK_2, double c) {
  using P = Polynomial<T>;
  const T zero(0.0);
  const P s{zero, T(1.0)};
  const P k_minus_cs{K, T(-c)};
  const P k_plus_2cs{K, T(2.0 * c)};
  const T four_k_minus_c = (K - c) * 4.0;

  ObstructionPolynomials<T> out;
  out.A = P{K1 * K1} - k_minus_cs * P{lapK} + k_minus_cs * k_plus_2cs * four_k_minus_c;
  out.E = P{K1 * K1 * K12} + k_minus_cs * (P{K12 * lapK - K1 * lapK_2} - k_plus_2cs * (four_k_minus_c * K12));
  out.F = P{K * lapK - K1 * K1 - K * K * four_k_minus_c,
            K11 * (-2.0 * c) + K22 * (-8.0 * c) + K * four_k_minus_c * (4.0 * c)};
  const P F2 = out.F * out.F;
  const P one_minus_s{T(1.0), T(-1.0)};
  out.Q = out.A * out.A * F2 + s * s * out.E * out.E * T(36.0 * c * c) +
          s * one_minus_s * k_minus_cs * F2 * (K1 * K1 * (36.0 * c * c));
  return out;
}

struct ObstructionCoeffs {
  Polynomial<double> A;
  Polynomial<double> E;
  Polynomial<double> F;
  Polynomial<double> Q;

  double scale() const { return coefficient_scale(Q); }
};

// Requires the gradient frame (grad K != 0); UndefinedError otherwise.
ObstructionCoeffs obstruction_coeffs(const CurvatureJet& jet, double c);

// All nu in [-1, 1] with Q(nu^2) = 0, ascending and closed under negation.
// DegeneratePointError when Q vanishes identically.
std::vector<double> raw_candidate_angles(const CurvatureJet& jet, double c);

enum class PropagationHint {
  General,
  // Warped-product chart: E vanishes identically and nu2 = 0 is used directly.
  WarpedChart,
};

// grad nu in the gradient frame (grad K, J grad K) / |grad K|.
struct PropagatedGradient {
  double nu1 = 0.0;
  double nu2 = 0.0;
};

inline constexpr double kPropagationNuGuard = 1e-8;

// nu1 = A / (6 c nu K1), nu2 = -nu E / (K1 F). SingularPropagationError names
// the vanishing divisor.
PropagatedGradient propagate_gradient(const CurvatureJet& jet, double c, double nu,
                                      PropagationHint hint = PropagationHint::General);

// Gradient-frame components rotated into the chart frame (e1, e2).
std::array<double, 2> to_chart_frame(const CurvatureJet& jet, const PropagatedGradient& g);

struct Candidate {
  double nu = 0.0;
  bool admissible = false;
  std::string rejection;  // empty when admissible
  // grad nu from the obstruction data, chart frame.
  std::array<double, 2> grad_propagated{};
  double m1_propagated = 0.0;
  // grad nu of the root branch itself (implicit differentiation of Q), chart frame.
  std::array<double, 2> grad_branch{};
  double m1_branch = 0.0;
};

struct CandidateOptions {
  double m1_tol = 1e-8;
  // |grad_branch - grad_propagated| <= grad_match_tol * max(1, |grad_propagated|)
  double grad_match_tol = 1e-6;
  double grad_eps = kDefaultGradEps;
};

struct CandidateReport {
  ChartPoint at;
  CurvatureJet jet;
  ObstructionCoeffs coeffs;
  std::vector<Candidate> candidates;  // every raw root, admissible or not

  std::vector<double> admissible() const;
  std::vector<double> raw() const;
};

// Roots of the obstruction polynomial at p, each checked by propagating grad nu
// and testing M1 against the gradient of its own root branch.
CandidateReport candidate_angles(const MetricChart& chart, ChartPoint p, const CandidateOptions& options = {});

}  // namespace isomin
