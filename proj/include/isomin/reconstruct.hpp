#pragma once

#include <Eigen/Dense>
#include <array>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "isomin/angle.hpp"
#include "isomin/compat.hpp"
#include "isomin/exec.hpp"
#include "isomin/surface.hpp"

namespace isomin {

// M^2(c) as the quadric <p, p> = 1/c in R^3 with the form diag(1, 1, +-1),
// times the real line.
struct AmbientModel {
  double c = -1.0;

  static AmbientModel for_curvature(double c);

  double sign() const { return c > 0.0 ? 1.0 : -1.0; }
  double form(const Eigen::Vector3d& a, const Eigen::Vector3d& b) const {
    return a[0] * b[0] + a[1] * b[1] + sign() * a[2] * b[2];
  }
  // Horizontal form plus dh^2 on 4-vectors (x0, x1, x2, h).
  double form4(const Eigen::Vector4d& a, const Eigen::Vector4d& b) const {
    return form(a.head<3>(), b.head<3>()) + a[3] * b[3];
  }
  Eigen::Vector3d basepoint() const;
  // Orthonormal basis of the tangent plane at basepoint().
  std::array<Eigen::Vector3d, 2> tangent_basis() const;
  std::string signature() const;
};

struct FrameState {
  Eigen::Vector3d p = Eigen::Vector3d::Zero();
  double h = 0.0;
  Eigen::Vector4d F1 = Eigen::Vector4d::Zero();
  Eigen::Vector4d F2 = Eigen::Vector4d::Zero();
  Eigen::Vector4d N = Eigen::Vector4d::Zero();
};

// nu x nv nodes on a rectangle; the base node (where theta = theta0 and the
// initial frame is placed) defaults to the centre node.
struct GridSpec {
  Rect domain;
  int nu = 201;
  int nv = 201;
  int base_i = -1;
  int base_j = -1;
  int substeps = 0;  // RK4 steps per grid interval; 0 picks about range/200 per step
  bool reorthonormalize = false;

  static GridSpec over(const Rect& domain, int nu, int nv);

  double du() const { return (domain.u_max - domain.u_min) / (nu - 1); }
  double dv() const { return (domain.v_max - domain.v_min) / (nv - 1); }
  ChartPoint node(int i, int j) const { return {domain.u_min + i * du(), domain.v_min + j * dv()}; }
  int bi() const { return base_i < 0 ? nu / 2 : base_i; }
  int bj() const { return base_j < 0 ? nv / 2 : base_j; }
  int steps_per_interval() const;
  ChartPoint base() const { return node(bi(), bj()); }
  // ConfigError unless at least 5 x 5 nodes, substeps >= 0 and the base is a node.
  void validate() const;
};

struct ThetaOptions {
  double flat_margin = 1e-4;    // require 1 - nu^2 >= flat_margin at every node
  double curl_tol = 1e-4;
  double residual_tol = 1e-7;   // M1 / M2 on a verify_n x verify_n grid
  int verify_n = 21;
};

// (theta_u, theta_v) of dtheta = -nu/(1 - nu^2) dnu o J - alpha as jets.
std::array<Jet, 2> theta_form(const AngleField& field, ChartPoint p, int order);

// Primitive of the theta 1-form, tabulated on the grid by Gauss-Legendre
// quadrature along the base u-line and then along v-lines. Off-node values use
// the nearest node plus a two-leg path.
class ThetaField {
 public:
  const GridSpec& grid() const { return table_->grid; }
  double theta0() const { return theta0_; }
  double at_node(int i, int j) const { return theta0_ + table_->values[i * table_->grid.nv + j]; }
  double operator()(ChartPoint p) const;
  Jet jet(ChartPoint p, int order) const;
  // Largest |d theta_u/dv - d theta_v/du| over the nodes.
  double max_curl() const { return table_->max_curl; }
  ThetaField shifted(double d) const;

 private:
  friend ThetaField solve_theta(const AngleField&, const GridSpec&, double, const ThetaOptions&);
  struct Table {
    AngleField field;
    GridSpec grid;
    std::vector<double> values;
    double max_curl = 0.0;
  };
  std::shared_ptr<const Table> table_;
  double theta0_ = 0.0;
};

// FlatPointError if 1 - nu^2 < flat_margin at a node; IntegrabilityError if the
// field fails M1/M2 or the 1-form is not closed.
ThetaField solve_theta(const AngleField& field, const GridSpec& grid, double theta0 = 0.0,
                       const ThetaOptions& options = {});

// T = sqrt(1 - nu^2) e^{(theta + assoc) J} e1 and e^{assoc J} S with S T = -grad nu.
GaussCodazziData build_data(const AngleField& field, const ThetaField& theta, double assoc_angle = 0.0);

struct ImmersionGrid {
  GridSpec grid;
  AmbientModel model;
  std::vector<FrameState> states;  // index i * nv + j

  const FrameState& at(int i, int j) const { return states[i * grid.nv + j]; }
  FrameState& at(int i, int j) { return states[i * grid.nv + j]; }
};

double gram_drift(const AmbientModel& model, const FrameState& s);

struct IntegrationOptions {
  double drift_limit = 1e-5;
  Exec exec = Exec::Parallel;
};

// Integrates the structure equations with classical RK4: base u-line first,
// then each v-line from its base-row node.
ImmersionGrid integrate_immersion(const GaussCodazziData& data, const AmbientModel& model, const GridSpec& grid,
                                  const IntegrationOptions& options = {});

// Frame at the base node with vertical components (T1, T2, nu), completed by a
// Householder reflection.
FrameState initial_frame(const AmbientModel& model, double T1, double T2, double nu);

struct ImmersionReport {
  double metric_rel_error = 0.0;
  double shape_error = 0.0;        // FD second fundamental form vs S
  double mean_curvature = 0.0;     // max |H|
  double gram_drift = 0.0;
  double normal_angle_error = 0.0; // max |<N, xi> - nu|
  double height_error = 0.0;       // max |dh(e_i) - T_i|
  double quadric_error = 0.0;      // max |<p, p> - 1/c|
  double tangency_error = 0.0;     // max |<F_h, p>|, |<N_h, p>|
  int interior_nodes = 0;
};

// 6th-order central differences at nodes at least three away from the boundary.
ImmersionReport verify_immersion(const ImmersionGrid& grid, const GaussCodazziData& data);

struct ReconstructOptions {
  ThetaOptions theta;
  IntegrationOptions integration;
  double theta0 = 0.0;
};

ImmersionGrid reconstruct(const AngleField& field, const GridSpec& grid, double assoc_angle = 0.0,
                          const ReconstructOptions& options = {});

struct AssociateMember {
  double assoc_angle = 0.0;
  GaussCodazziData data;
  ImmersionGrid immersion;
};

std::vector<AssociateMember> associate_sweep(const AngleField& field, const std::vector<double>& angles,
                                             const GridSpec& grid, const ReconstructOptions& options = {});

void write_csv(std::ostream& os, const ImmersionGrid& grid);
void write_obj(std::ostream& os, const ImmersionGrid& grid);
std::string obj_projection_name(const AmbientModel& model);

}  // namespace isomin
