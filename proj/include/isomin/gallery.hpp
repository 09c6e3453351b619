#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "isomin/angle.hpp"
#include "isomin/surface.hpp"

namespace isomin::gallery {

struct FixtureParams {
  double l = 1.0;     // Sa Earp pitch
  double d = 2.0;     // Sa Earp prime integral
  double beta = 2.0;  // catenoid / unduloid neck parameter
  double t = 0.0;     // hyperbolic translation along v = 0 (parabolic catenoid)
  std::optional<double> c;  // only the totally geodesic fixtures accept an override
};

struct NamedAngle {
  std::string name;
  ScalarField nu;
};

struct GallerySurface {
  std::string name;
  MetricChart chart;
  double c = -1.0;
  std::vector<NamedAngle> angle_closures;
  std::optional<ScalarField> K_closed_form;
  std::vector<std::string> tags;

  bool has_tag(std::string_view tag) const;
  // ConfigError for an unknown closure name.
  const ScalarField& angle(std::string_view name) const;
  AngleField angle_field(std::string_view name) const;
};

// parabolic-catenoid, catenoid, unduloid, saearp, horizontal-slice,
// vertical-plane. ConfigError on unknown names or out-of-range parameters.
GallerySurface fixture(std::string_view name, const FixtureParams& params = {});
const std::vector<std::string>& fixture_names();

// Hyperbolic translation by t along the geodesic v = 0 of (du^2 + dv^2)/cos^2 u,
// realized through the half-plane model.
ChartPoint hyperbolic_translation(double t, ChartPoint p);
// Pullback of the strip metric under the translation divided by the metric;
// identically 1 for an isometry.
double translation_metric_ratio(double t, ChartPoint p);
// sin u composed with the translation, in closed form.
ScalarField translated_catenoid_angle(double t);

// If nu agrees with some translated parabolic-catenoid angle on an n x n grid
// over `domain` (within tol), the translation parameter. (0, 0) must lie in
// the domain.
std::optional<double> match_translated_catenoid(const ScalarField& nu, const Rect& domain, int n, double tol);

struct SaEarpPartner {
  double l_bar = 0.0;
  double d_bar = 0.0;
};

// Solves (d^2 - 1)/(l^2 + 1) = (1 - d_bar^2)/(d_bar^2 + l_bar^2) for l_bar >= 0.
// Empty when the solution would need l_bar^2 < 0. Requires d^2 > 1.
std::optional<SaEarpPartner> saearp_partner(double l, double d, double d_bar);
// The solution family sampled at `samples` evenly spaced d_bar in (-1, 1).
std::vector<SaEarpPartner> saearp_partner_family(double l, double d, int samples);

}  // namespace isomin::gallery
