#include "isomin/reconstruct.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "isomin/errors.hpp"

namespace isomin {

AmbientModel AmbientModel::for_curvature(double c) {
  if (c == 0.0 || !std::isfinite(c)) throw ConfigError("ambient curvature must be finite and non-zero");
  return AmbientModel{c};
}

Eigen::Vector3d AmbientModel::basepoint() const {
  const double r = 1.0 / std::sqrt(std::abs(c));
  return c > 0.0 ? Eigen::Vector3d(r, 0.0, 0.0) : Eigen::Vector3d(0.0, 0.0, r);
}

std::array<Eigen::Vector3d, 2> AmbientModel::tangent_basis() const {
  if (c > 0.0) return {Eigen::Vector3d(0.0, 1.0, 0.0), Eigen::Vector3d(0.0, 0.0, 1.0)};
  return {Eigen::Vector3d(1.0, 0.0, 0.0), Eigen::Vector3d(0.0, 1.0, 0.0)};
}

std::string AmbientModel::signature() const { return c > 0.0 ? "(+,+,+)" : "(+,+,-)"; }

GridSpec GridSpec::over(const Rect& domain, int nu, int nv) {
  GridSpec g;
  g.domain = domain;
  g.nu = nu;
  g.nv = nv;
  return g;
}

void GridSpec::validate() const {
  if (nu < 5 || nv < 5) throw ConfigError("grid needs at least 5 x 5 nodes");
  if (substeps < 0) throw ConfigError("substeps must be >= 0");
  if (!(domain.u_max > domain.u_min) || !(domain.v_max > domain.v_min)) throw ConfigError("empty grid domain");
  if (bi() >= nu || bj() >= nv) throw ConfigError("base node outside the grid");
}

int GridSpec::steps_per_interval() const {
  if (substeps > 0) return substeps;
  return std::max(1, static_cast<int>(std::ceil(200.0 / (std::max(nu, nv) - 1) - 1e-9)));
}

namespace {

// 4-point Gauss-Legendre on [0, 1].
constexpr std::array<double, 4> kGLx{0.5 - 0.5 * 0.8611363115940526, 0.5 - 0.5 * 0.3399810435848563,
                                     0.5 + 0.5 * 0.3399810435848563, 0.5 + 0.5 * 0.8611363115940526};
constexpr std::array<double, 4> kGLw{0.5 * 0.3478548451374538, 0.5 * 0.6521451548625461,
                                     0.5 * 0.6521451548625461, 0.5 * 0.3478548451374538};

double segment_u(const AngleField& f, double a, double b, double v) {
  if (a == b) return 0.0;
  double sum = 0.0;
  for (int k = 0; k < 4; ++k) sum += kGLw[k] * theta_form(f, {a + kGLx[k] * (b - a), v}, 0)[0].value();
  return sum * (b - a);
}

double segment_v(const AngleField& f, double u, double a, double b) {
  if (a == b) return 0.0;
  double sum = 0.0;
  for (int k = 0; k < 4; ++k) sum += kGLw[k] * theta_form(f, {u, a + kGLx[k] * (b - a)}, 0)[1].value();
  return sum * (b - a);
}

std::string node_label(const GridSpec& g, int i, int j) {
  std::ostringstream os;
  const ChartPoint p = g.node(i, j);
  os << "node (" << i << ", " << j << ") at (u, v) = (" << p.u << ", " << p.v << ")";
  return os.str();
}

}  // namespace

std::array<Jet, 2> theta_form(const AngleField& field, ChartPoint p, int order) {
  const LocalFrame fr = local_frame(field.chart, p, order + 1);
  const Jet nu = field.nu.jet(p, order + 1);
  const Jet nu1 = fr.d1(nu);
  const Jet nu2 = fr.d2(nu);
  const Jet nu0 = nu.truncated(order);
  const Jet w = 1.0 - square(nu0);
  const Jet d1 = -nu0 * nu2 / w - fr.alpha1;
  const Jet d2 = nu0 * nu1 / w - fr.alpha2;
  return {fr.P.truncated(order) * d1, fr.R.truncated(order) * d2};
}

double ThetaField::operator()(ChartPoint p) const {
  const GridSpec& g = table_->grid;
  table_->field.chart.require_inside(p);
  const int i = std::clamp(static_cast<int>(std::lround((p.u - g.domain.u_min) / g.du())), 0, g.nu - 1);
  const int j = std::clamp(static_cast<int>(std::lround((p.v - g.domain.v_min) / g.dv())), 0, g.nv - 1);
  const ChartPoint n = g.node(i, j);
  return at_node(i, j) + segment_u(table_->field, n.u, p.u, n.v) + segment_v(table_->field, p.u, n.v, p.v);
}

Jet ThetaField::jet(ChartPoint p, int order) const {
  Jet out((*this)(p), order);
  if (order == 0) return out;
  const std::array<Jet, 2> form = theta_form(table_->field, p, order - 1);
  for (int total = 1; total <= order; ++total) {
    for (int j = 0; j <= total; ++j) {
      const int i = total - j;
      out.set_coeff(i, j, i >= 1 ? form[0].coeff(i - 1, j) / i : form[1].coeff(0, j - 1) / j);
    }
  }
  return out;
}

ThetaField ThetaField::shifted(double d) const {
  ThetaField t = *this;
  t.theta0_ += d;
  return t;
}

ThetaField solve_theta(const AngleField& field, const GridSpec& grid, double theta0, const ThetaOptions& options) {
  grid.validate();
  const MetricChart& chart = field.chart;
  const Rect& cd = chart.domain();
  const Rect& gd = grid.domain;
  if (gd.u_min < cd.u_min - 1e-12 || gd.u_max > cd.u_max + 1e-12 || gd.v_min < cd.v_min - 1e-12 ||
      gd.v_max > cd.v_max + 1e-12) {
    throw DomainError("reconstruction grid extends outside the chart domain");
  }

  for (int i = 0; i < grid.nu; ++i) {
    for (int j = 0; j < grid.nv; ++j) {
      const double nu = field.nu(grid.node(i, j));
      if (!std::isfinite(nu)) throw EvaluationError("angle function is not finite at " + node_label(grid, i, j));
      if (1.0 - nu * nu < options.flat_margin) {
        throw FlatPointError("flat point: nu^2 = " + std::to_string(nu * nu) + " at " + node_label(grid, i, j) +
                             "; clip the domain");
      }
    }
  }

  const int n = options.verify_n;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const ChartPoint p{gd.u_min + (gd.u_max - gd.u_min) * a / (n - 1), gd.v_min + (gd.v_max - gd.v_min) * b / (n - 1)};
      const double m1 = residual_M1(field, p);
      const double m2 = residual_M2(field, p);
      if (!(std::abs(m1) <= options.residual_tol) || !(std::abs(m2) <= options.residual_tol)) {
        std::ostringstream os;
        os << "angle field violates M1/M2 at (" << p.u << ", " << p.v << "): M1 = " << m1 << ", M2 = " << m2;
        throw IntegrabilityError(os.str());
      }
    }
  }

  auto table = std::make_shared<ThetaField::Table>(ThetaField::Table{field, grid, {}, 0.0});
  std::vector<double>& val = table->values;
  val.assign(static_cast<std::size_t>(grid.nu) * grid.nv, 0.0);
  const int bi = grid.bi();
  const int bj = grid.bj();
  const double vb = grid.node(bi, bj).v;
  for (int i = bi + 1; i < grid.nu; ++i)
    val[i * grid.nv + bj] = val[(i - 1) * grid.nv + bj] + segment_u(field, grid.node(i - 1, bj).u, grid.node(i, bj).u, vb);
  for (int i = bi - 1; i >= 0; --i)
    val[i * grid.nv + bj] = val[(i + 1) * grid.nv + bj] + segment_u(field, grid.node(i + 1, bj).u, grid.node(i, bj).u, vb);

  std::vector<double> row_curl(grid.nu, 0.0);
  for_each_index(grid.nu, Exec::Parallel, [&](int i) {
    const double u = grid.node(i, 0).u;
    double* row = &val[i * grid.nv];
    for (int j = bj + 1; j < grid.nv; ++j) row[j] = row[j - 1] + segment_v(field, u, grid.node(i, j - 1).v, grid.node(i, j).v);
    for (int j = bj - 1; j >= 0; --j) row[j] = row[j + 1] + segment_v(field, u, grid.node(i, j + 1).v, grid.node(i, j).v);
    double m = 0.0;
    for (int j = 0; j < grid.nv; ++j) {
      const std::array<Jet, 2> f = theta_form(field, grid.node(i, j), 1);
      m = std::max(m, std::abs(f[0].coeff(0, 1) - f[1].coeff(1, 0)));
    }
    row_curl[i] = m;
  });
  table->max_curl = *std::max_element(row_curl.begin(), row_curl.end());
  if (!(table->max_curl <= options.curl_tol)) {
    throw IntegrabilityError("theta 1-form is not closed: max curl " + std::to_string(table->max_curl));
  }

  ThetaField t;
  t.table_ = std::move(table);
  t.theta0_ = theta0;
  return t;
}

GaussCodazziData build_data(const AngleField& field, const ThetaField& theta, double assoc_angle) {
  const MetricChart chart = field.chart;
  const ScalarField nu = field.nu;
  auto tangential = [nu, theta, assoc_angle](double u, double v, int order, int component) {
    const ChartPoint p{u, v};
    const Jet n = nu.jet(p, order);
    const Jet th = theta.jet(p, order) + assoc_angle;
    return sqrt(1.0 - square(n)) * (component == 0 ? cos(th) : sin(th));
  };
  const double ca = std::cos(assoc_angle);
  const double sa = std::sin(assoc_angle);
  auto shape = [chart, nu, theta, ca, sa](double u, double v, int order, int component) {
    const ChartPoint p{u, v};
    const FrameGradientJets g = frame_gradient(chart, nu, p, order);
    const Jet th = theta.jet(p, order);
    const Jet norm_sq = 1.0 - square(g.f);
    if (!(std::sqrt(std::max(norm_sq.value(), 0.0)) >= 1e-10)) {
      throw FlatPointError("flat point: |T| < 1e-10");
    }
    const Jet r = sqrt(norm_sq);
    const Jet t1 = r * cos(th);
    const Jet t2 = r * sin(th);
    const Jet s1 = (-g.f1 * t1 + g.f2 * t2) / norm_sq;
    const Jet s2 = (-g.f1 * t2 - g.f2 * t1) / norm_sq;
    return component == 0 ? ca * s1 - sa * s2 : sa * s1 + ca * s2;
  };
  return GaussCodazziData{
      chart,
      nu,
      ScalarField([tangential](double u, double v, int o) { return tangential(u, v, o, 0); }),
      ScalarField([tangential](double u, double v, int o) { return tangential(u, v, o, 1); }),
      ScalarField([shape](double u, double v, int o) { return shape(u, v, o, 0); }),
      ScalarField([shape](double u, double v, int o) { return shape(u, v, o, 1); }),
  };
}

double gram_drift(const AmbientModel& model, const FrameState& s) {
  const std::array<const Eigen::Vector4d*, 3> f{&s.F1, &s.F2, &s.N};
  double d = 0.0;
  for (int a = 0; a < 3; ++a)
    for (int b = a; b < 3; ++b) d = std::max(d, std::abs(model.form4(*f[a], *f[b]) - (a == b ? 1.0 : 0.0)));
  return d;
}

FrameState initial_frame(const AmbientModel& model, double T1, double T2, double nu) {
  Eigen::Vector3d w(T1, T2, nu);
  w.normalize();
  const Eigen::Vector3d e3(0.0, 0.0, 1.0);
  Eigen::Matrix3d M;
  if (nu <= 0.0) {
    const Eigen::Vector3d v = e3 - w;
    M = Eigen::Matrix3d::Identity() - 2.0 * v * v.transpose() / v.squaredNorm();
  } else {
    const Eigen::Vector3d v = e3 + w;
    M = Eigen::Matrix3d::Identity() - 2.0 * v * v.transpose() / v.squaredNorm();
    M.col(2) = -M.col(2);
  }
  if (M.determinant() < 0.0) M.col(0) = -M.col(0);

  const auto E = model.tangent_basis();
  auto lift = [&](int row) {
    Eigen::Vector4d out;
    out.head<3>() = M(row, 0) * E[0] + M(row, 1) * E[1];
    out[3] = M(row, 2);
    return out;
  };
  FrameState s;
  s.p = model.basepoint();
  s.h = 0.0;
  s.F1 = lift(0);
  s.F2 = lift(1);
  s.N = lift(2);
  return s;
}

namespace {

using State = Eigen::Matrix<double, 16, 1>;

State pack(const FrameState& s) {
  State y;
  y.segment<3>(0) = s.p;
  y[3] = s.h;
  y.segment<4>(4) = s.F1;
  y.segment<4>(8) = s.F2;
  y.segment<4>(12) = s.N;
  return y;
}

FrameState unpack(const State& y) {
  FrameState s;
  s.p = y.segment<3>(0);
  s.h = y[3];
  s.F1 = y.segment<4>(4);
  s.F2 = y.segment<4>(8);
  s.N = y.segment<4>(12);
  return s;
}

struct Coefficients {
  double speed = 0.0;  // P along u, R along v
  double alpha = 0.0;  // alpha(e_j)
  double s1 = 0.0;
  double s2 = 0.0;
};

class Integrator {
 public:
  Integrator(const GaussCodazziData& data, const AmbientModel& model) : data_(data), model_(model) {}

  Coefficients sample(ChartPoint q, int axis) const {
    const LocalFrame fr = local_frame(data_.chart, q, 1);
    Coefficients k;
    k.speed = axis == 0 ? fr.P.value() : fr.R.value();
    k.alpha = axis == 0 ? fr.alpha1.value() : fr.alpha2.value();
    k.s1 = data_.s1.jet(q, 0).value();
    k.s2 = data_.s2.jet(q, 0).value();
    return k;
  }

  State rhs(const State& y, const Coefficients& k, int axis) const {
    const Eigen::Vector3d p = y.segment<3>(0);
    const Eigen::Vector4d F1 = y.segment<4>(4);
    const Eigen::Vector4d F2 = y.segment<4>(8);
    const Eigen::Vector4d N = y.segment<4>(12);
    Eigen::Vector4d p4;
    p4 << p, 0.0;
    const Eigen::Vector4d& Fj = axis == 0 ? F1 : F2;
    auto gauss = [&](const Eigen::Vector4d& X) { return model_.c * model_.form(Fj.head<3>(), X.head<3>()) * p4; };

    Eigen::Vector4d dF1, dF2, dN;
    if (axis == 0) {
      dF1 = k.alpha * F2 + k.s1 * N - gauss(F1);
      dF2 = -k.alpha * F1 + k.s2 * N - gauss(F2);
      dN = -k.s1 * F1 - k.s2 * F2 - gauss(N);
    } else {
      dF1 = k.alpha * F2 + k.s2 * N - gauss(F1);
      dF2 = -k.alpha * F1 - k.s1 * N - gauss(F2);
      dN = -k.s2 * F1 + k.s1 * F2 - gauss(N);
    }
    State d;
    d.segment<4>(0) = Fj;
    d.segment<4>(4) = dF1;
    d.segment<4>(8) = dF2;
    d.segment<4>(12) = dN;
    return k.speed * d;
  }

  // One node-to-node move along an axis, split into `substeps` RK4 steps.
  State advance(State y, ChartPoint from, double delta, int axis, int substeps, bool reorthonormalize) const {
    const double h = delta / substeps;
    for (int s = 0; s < substeps; ++s) {
      ChartPoint q0 = from;
      (axis == 0 ? q0.u : q0.v) += s * h;
      ChartPoint qm = q0;
      (axis == 0 ? qm.u : qm.v) += 0.5 * h;
      ChartPoint q1 = q0;
      (axis == 0 ? q1.u : q1.v) += h;
      const Coefficients k0 = sample(q0, axis);
      const Coefficients km = sample(qm, axis);
      const Coefficients k1 = sample(q1, axis);
      const State a = rhs(y, k0, axis);
      const State b = rhs(y + 0.5 * h * a, km, axis);
      const State c = rhs(y + 0.5 * h * b, km, axis);
      const State d = rhs(y + h * c, k1, axis);
      y += (h / 6.0) * (a + 2.0 * b + 2.0 * c + d);
      if (reorthonormalize) y = orthonormalized(y);
    }
    return y;
  }

  State orthonormalized(const State& y) const {
    FrameState s = unpack(y);
    auto normalize = [&](Eigen::Vector4d& x) { x /= std::sqrt(model_.form4(x, x)); };
    normalize(s.F1);
    s.F2 -= model_.form4(s.F2, s.F1) * s.F1;
    normalize(s.F2);
    s.N -= model_.form4(s.N, s.F1) * s.F1 + model_.form4(s.N, s.F2) * s.F2;
    normalize(s.N);
    return pack(s);
  }

 private:
  const GaussCodazziData& data_;
  const AmbientModel& model_;
};

void check_state(const AmbientModel& model, const GridSpec& grid, const FrameState& s, int i, int j, double limit) {
  const double drift = gram_drift(model, s);
  if (!std::isfinite(drift) || !std::isfinite(s.h) || !s.p.allFinite()) {
    throw IntegrationDivergedError("integration produced non-finite state at " + node_label(grid, i, j));
  }
  if (drift > limit) {
    std::ostringstream os;
    os << "integration diverged at " << node_label(grid, i, j) << ": Gram drift " << drift;
    throw IntegrationDivergedError(os.str());
  }
}

}  // namespace

ImmersionGrid integrate_immersion(const GaussCodazziData& data, const AmbientModel& model, const GridSpec& grid,
                                  const IntegrationOptions& options) {
  grid.validate();
  ImmersionGrid out{grid, model, std::vector<FrameState>(static_cast<std::size_t>(grid.nu) * grid.nv)};
  const Integrator integ(data, model);
  const int bi = grid.bi();
  const int bj = grid.bj();
  const ChartPoint base = grid.base();
  out.at(bi, bj) = initial_frame(model, data.T1(base), data.T2(base), data.nu(base));
  check_state(model, grid, out.at(bi, bj), bi, bj, options.drift_limit);

  const double du = grid.du();
  const double dv = grid.dv();
  auto step = [&](const FrameState& s, ChartPoint from, double delta, int axis) {
    return unpack(integ.advance(pack(s), from, delta, axis, grid.steps_per_interval(), grid.reorthonormalize));
  };

  for (int i = bi + 1; i < grid.nu; ++i) {
    out.at(i, bj) = step(out.at(i - 1, bj), grid.node(i - 1, bj), du, 0);
    check_state(model, grid, out.at(i, bj), i, bj, options.drift_limit);
  }
  for (int i = bi - 1; i >= 0; --i) {
    out.at(i, bj) = step(out.at(i + 1, bj), grid.node(i + 1, bj), -du, 0);
    check_state(model, grid, out.at(i, bj), i, bj, options.drift_limit);
  }

  for_each_index(grid.nu, options.exec, [&](int i) {
    for (int j = bj + 1; j < grid.nv; ++j) {
      out.at(i, j) = step(out.at(i, j - 1), grid.node(i, j - 1), dv, 1);
      check_state(model, grid, out.at(i, j), i, j, options.drift_limit);
    }
    for (int j = bj - 1; j >= 0; --j) {
      out.at(i, j) = step(out.at(i, j + 1), grid.node(i, j + 1), -dv, 1);
      check_state(model, grid, out.at(i, j), i, j, options.drift_limit);
    }
  });
  return out;
}

ImmersionReport verify_immersion(const ImmersionGrid& grid, const GaussCodazziData& data) {
  const GridSpec& g = grid.grid;
  const AmbientModel& model = grid.model;
  const int nu = g.nu;
  const int nv = g.nv;
  const double du = g.du();
  const double dv = g.dv();
  auto x = [&](int i, int j) {
    const FrameState& s = grid.at(i, j);
    Eigen::Vector4d out;
    out << s.p, s.h;
    return out;
  };
  static constexpr std::array<double, 7> d1{-1.0 / 60, 9.0 / 60, -45.0 / 60, 0.0, 45.0 / 60, -9.0 / 60, 1.0 / 60};
  static constexpr std::array<double, 7> d2{2.0 / 180,    -27.0 / 180, 270.0 / 180, -490.0 / 180,
                                            270.0 / 180, -27.0 / 180, 2.0 / 180};
  constexpr int m = 3;

  std::vector<ImmersionReport> rows(nu);
  for_each_index(nu, Exec::Parallel, [&](int i) {
    ImmersionReport& r = rows[i];
    for (int j = 0; j < nv; ++j) {
      const FrameState& s = grid.at(i, j);
      const ChartPoint p = g.node(i, j);
      r.gram_drift = std::max(r.gram_drift, gram_drift(model, s));
      r.normal_angle_error = std::max(r.normal_angle_error, std::abs(s.N[3] - data.nu(p)));
      r.quadric_error = std::max(r.quadric_error, std::abs(model.form(s.p, s.p) - 1.0 / model.c));
      r.tangency_error = std::max({r.tangency_error, std::abs(model.form(s.F1.head<3>(), s.p)),
                                   std::abs(model.form(s.F2.head<3>(), s.p)), std::abs(model.form(s.N.head<3>(), s.p))});
      if (i < m || i >= nu - m || j < m || j >= nv - m) continue;

      Eigen::Vector4d xu = Eigen::Vector4d::Zero(), xv = Eigen::Vector4d::Zero();
      Eigen::Vector4d xuu = Eigen::Vector4d::Zero(), xvv = Eigen::Vector4d::Zero(), xuv = Eigen::Vector4d::Zero();
      for (int a = 0; a <= 2 * m; ++a) {
        xu += d1[a] * x(i + a - m, j);
        xv += d1[a] * x(i, j + a - m);
        xuu += d2[a] * x(i + a - m, j);
        xvv += d2[a] * x(i, j + a - m);
        for (int b = 0; b <= 2 * m; ++b) xuv += d1[a] * d1[b] * x(i + a - m, j + b - m);
      }
      xu /= du;
      xv /= dv;
      xuu /= du * du;
      xvv /= dv * dv;
      xuv /= du * dv;

      const ScaleFactors sf = data.chart.scale_factors(p, 0);
      const double P = sf.P.value();
      const double R = sf.R.value();
      const double metric = std::max({std::abs(model.form4(xu, xu) / (P * P) - 1.0),
                                      std::abs(model.form4(xv, xv) / (R * R) - 1.0),
                                      std::abs(model.form4(xu, xv) / (P * R))});
      r.metric_rel_error = std::max(r.metric_rel_error, metric);

      const double s1 = data.s1(p);
      const double s2 = data.s2(p);
      const double ii11 = model.form4(xuu, s.N) / (P * P);
      const double ii12 = model.form4(xuv, s.N) / (P * R);
      const double ii22 = model.form4(xvv, s.N) / (R * R);
      r.shape_error = std::max({r.shape_error, std::abs(ii11 - s1), std::abs(ii12 - s2), std::abs(ii22 + s1)});
      r.mean_curvature = std::max(r.mean_curvature, std::abs(0.5 * (ii11 + ii22)));

      r.height_error = std::max(
          {r.height_error, std::abs(xu[3] / P - data.T1(p)), std::abs(xv[3] / R - data.T2(p))});
      ++r.interior_nodes;
    }
  });

  ImmersionReport out;
  for (const ImmersionReport& r : rows) {
    out.metric_rel_error = std::max(out.metric_rel_error, r.metric_rel_error);
    out.shape_error = std::max(out.shape_error, r.shape_error);
    out.mean_curvature = std::max(out.mean_curvature, r.mean_curvature);
    out.gram_drift = std::max(out.gram_drift, r.gram_drift);
    out.normal_angle_error = std::max(out.normal_angle_error, r.normal_angle_error);
    out.height_error = std::max(out.height_error, r.height_error);
    out.quadric_error = std::max(out.quadric_error, r.quadric_error);
    out.tangency_error = std::max(out.tangency_error, r.tangency_error);
    out.interior_nodes += r.interior_nodes;
  }
  return out;
}

ImmersionGrid reconstruct(const AngleField& field, const GridSpec& grid, double assoc_angle,
                          const ReconstructOptions& options) {
  const ThetaField theta = solve_theta(field, grid, options.theta0, options.theta);
  const GaussCodazziData data = build_data(field, theta, assoc_angle);
  return integrate_immersion(data, AmbientModel::for_curvature(field.chart.c()), grid, options.integration);
}

std::vector<AssociateMember> associate_sweep(const AngleField& field, const std::vector<double>& angles,
                                             const GridSpec& grid, const ReconstructOptions& options) {
  const ThetaField theta = solve_theta(field, grid, options.theta0, options.theta);
  const AmbientModel model = AmbientModel::for_curvature(field.chart.c());
  std::vector<AssociateMember> out;
  for (double a : angles) {
    GaussCodazziData data = build_data(field, theta, a);
    ImmersionGrid imm = integrate_immersion(data, model, grid, options.integration);
    out.push_back({a, std::move(data), std::move(imm)});
  }
  return out;
}

std::string obj_projection_name(const AmbientModel& model) {
  return model.c < 0.0 ? "poincare-disk" : "orthographic";
}

void write_csv(std::ostream& os, const ImmersionGrid& grid) {
  os << "# signature " << grid.model.signature() << " c=" << grid.model.c << "\n";
  os << "u,v,x0,x1,x2,h,nu\n";
  os << std::setprecision(17);
  for (int i = 0; i < grid.grid.nu; ++i) {
    for (int j = 0; j < grid.grid.nv; ++j) {
      const ChartPoint q = grid.grid.node(i, j);
      const FrameState& s = grid.at(i, j);
      os << q.u << ',' << q.v << ',' << s.p[0] << ',' << s.p[1] << ',' << s.p[2] << ',' << s.h << ',' << s.N[3]
         << '\n';
    }
  }
}

void write_obj(std::ostream& os, const ImmersionGrid& grid) {
  const AmbientModel& m = grid.model;
  const int nu = grid.grid.nu;
  const int nv = grid.grid.nv;
  os << "# projection " << obj_projection_name(m) << "\n";
  os << "# signature " << m.signature() << " c=" << m.c << "\n";
  os << std::setprecision(12);
  const double k = std::sqrt(std::abs(m.c));
  for (const FrameState& s : grid.states) {
    if (m.c < 0.0) {
      const double den = 1.0 + s.p[2] * k;
      os << "v " << s.p[0] / den << ' ' << s.p[1] / den << ' ' << s.h << '\n';
    } else {
      os << "v " << s.p[0] << ' ' << s.p[1] << ' ' << s.h << '\n';
    }
  }
  for (int i = 0; i + 1 < nu; ++i) {
    for (int j = 0; j + 1 < nv; ++j) {
      const int a = i * nv + j + 1;
      const int b = (i + 1) * nv + j + 1;
      os << "f " << a << ' ' << b << ' ' << b + 1 << '\n';
      os << "f " << a << ' ' << b + 1 << ' ' << a + 1 << '\n';
    }
  }
}

}  // namespace isomin
