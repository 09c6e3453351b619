#include "isomin/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace isomin {

void ResidualStats::add(double r) {
  const double a = std::abs(r);
  if (!(a <= max_abs)) max_abs = a;  // NaN propagates
  sum_abs += a;
  min = count ? std::min(min, r) : r;
  max = count ? std::max(max, r) : r;
  ++count;
}

void ResidualStats::merge(const ResidualStats& o) {
  if (!(o.max_abs <= max_abs)) max_abs = o.max_abs;
  sum_abs += o.sum_abs;
  if (o.count) {
    min = count ? std::min(min, o.min) : o.min;
    max = count ? std::max(max, o.max) : o.max;
  }
  count += o.count;
}

namespace {

// Rows are reduced in index order so Serial and Parallel agree bit for bit.
template <class Acc, class Row>
Acc reduce_rows(int n, Exec exec, Row row) {
  std::vector<Acc> rows(n);
  for_each_index(n, exec, [&](int i) { row(i, rows[i]); });
  Acc out;
  for (const Acc& r : rows) out.merge(r);
  return out;
}

struct FieldAcc : FieldResiduals {
  void merge(const FieldAcc& o) {
    m1.merge(o.m1);
    m2.merge(o.m2);
    m3.merge(o.m3);
    e22.merge(o.e22);
    e23.merge(o.e23);
    q.merge(o.q);
    e2_skipped += o.e2_skipped;
    q_skipped += o.q_skipped;
  }
};

struct CompatAcc : CompatStats {
  void merge(const CompatAcc& o) {
    c1.merge(o.c1);
    c2.merge(o.c2);
    c3.merge(o.c3);
    c4.merge(o.c4);
    c5.merge(o.c5);
  }
};

struct RicciAcc : RicciStats {
  void merge(const RicciAcc& o) {
    ricci.merge(o.ricci);
    reduction_gap.merge(o.reduction_gap);
  }
};

}  // namespace

FieldResiduals residual_sweep(const AngleField& field, const SampleGrid& grid, Exec exec) {
  const double c = field.chart.c();
  return reduce_rows<FieldAcc>(grid.nu, exec, [&](int i, FieldAcc& acc) {
    for (int j = 0; j < grid.nv; ++j) {
      const ChartPoint p = grid.node(i, j);
      acc.m1.add(residual_M1(field, p));
      acc.m2.add(residual_M2(field, p));
      acc.m3.add(residual_M3(field, p));
      const E2Residuals e2 = e2_residuals(field, p);
      if (e2.defined) {
        acc.e22.add(e2.r22);
        acc.e23.add(e2.r23);
      } else {
        ++acc.e2_skipped;
      }
      const CurvatureJet jet = curvature_jet(field.chart, p);
      if (jet.gradient_defined) {
        const ObstructionCoeffs q = obstruction_coeffs(jet, c);
        const double nu = field.nu(p);
        acc.q.add(q.Q(nu * nu) / q.scale());
      } else {
        ++acc.q_skipped;
      }
    }
  });
}

CompatStats compat_sweep(const GaussCodazziData& data, const SampleGrid& grid, Exec exec) {
  return reduce_rows<CompatAcc>(grid.nu, exec, [&](int i, CompatAcc& acc) {
    for (int j = 0; j < grid.nv; ++j) {
      const CompatibilityResiduals r = check_compatibility(data, grid.node(i, j));
      acc.c1.add(r.c1);
      acc.c2.add(r.c2);
      acc.c3.add(r.c3);
      acc.c4.add(r.c4);
      acc.c5.add(r.c5);
    }
  });
}

RicciStats ricci_sweep(const MetricChart& chart, const SampleGrid& grid, Exec exec) {
  return reduce_rows<RicciAcc>(grid.nu, exec, [&](int i, RicciAcc& acc) {
    for (int j = 0; j < grid.nv; ++j) {
      const ChartPoint p = grid.node(i, j);
      acc.ricci.add(residual_ricci(chart, p));
      acc.reduction_gap.add(ricci_reduction_gap(chart, p));
    }
  });
}

}  // namespace isomin
