#pragma once

#include "isomin/angle.hpp"
#include "isomin/compat.hpp"
#include "isomin/exec.hpp"
#include "isomin/surface.hpp"

namespace isomin {

struct SampleGrid {
  Rect domain;
  int nu = 101;
  int nv = 101;

  ChartPoint node(int i, int j) const {
    return {domain.u_min + (domain.u_max - domain.u_min) * i / (nu - 1),
            domain.v_min + (domain.v_max - domain.v_min) * j / (nv - 1)};
  }
};

struct ResidualStats {
  double max_abs = 0.0;
  double sum_abs = 0.0;
  double min = 0.0;  // signed extremes
  double max = 0.0;
  int count = 0;

  double mean_abs() const { return count ? sum_abs / count : 0.0; }
  void add(double r);
  void merge(const ResidualStats& o);
};

struct FieldResiduals {
  ResidualStats m1, m2, m3, e22, e23;
  ResidualStats q;  // |Q(nu^2)| / coefficient scale, where grad K != 0
  int e2_skipped = 0;  // grad nu = 0
  int q_skipped = 0;   // grad K = 0
};

FieldResiduals residual_sweep(const AngleField& field, const SampleGrid& grid, Exec exec = Exec::Parallel);

struct CompatStats {
  ResidualStats c1, c2, c3, c4, c5;
};

CompatStats compat_sweep(const GaussCodazziData& data, const SampleGrid& grid, Exec exec = Exec::Parallel);

struct RicciStats {
  ResidualStats ricci;
  ResidualStats reduction_gap;  // M3 at c = 0 minus the Ricci residual
};

RicciStats ricci_sweep(const MetricChart& chart, const SampleGrid& grid, Exec exec = Exec::Parallel);

}  // namespace isomin
