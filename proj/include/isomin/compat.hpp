#pragma once

#include <algorithm>

#include "isomin/surface.hpp"

namespace isomin {

// (ds^2, S, T, nu) in frame components of the chart frame (e1, e2).
// S = [[s1, s2], [s2, -s1]] is traceless by construction.
struct GaussCodazziData {
  MetricChart chart;
  ScalarField nu;
  ScalarField T1;
  ScalarField T2;
  ScalarField s1;
  ScalarField s2;
};

struct CompatibilityResiduals {
  double c1 = 0.0;  // K - det S - c nu^2
  double c2 = 0.0;  // Codazzi, max |component|
  double c3 = 0.0;  // max_i |nabla_{e_i} T - nu S e_i|
  double c4 = 0.0;  // max_i |d nu(e_i) + <S e_i, T>|
  double c5 = 0.0;  // |T|^2 + nu^2 - 1

  double max_abs() const {
    return std::max({std::abs(c1), std::abs(c2), std::abs(c3), std::abs(c4), std::abs(c5)});
  }
};

CompatibilityResiduals check_compatibility(const GaussCodazziData& data, ChartPoint p);

}  // namespace isomin
