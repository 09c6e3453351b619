#include "isomin/gallery.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

#include "isomin/errors.hpp"

namespace isomin::gallery {

namespace {

using cplx = std::complex<double>;

constexpr Rect kParabolicDomain{-1.2, 1.2, -1.0, 1.0};

std::string describe(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

double fixed_c(const FixtureParams& p, double c, std::string_view name) {
  if (p.c && *p.c != c) {
    throw ConfigError(std::string(name) + " is defined for c = " + describe(c) + " only");
  }
  return c;
}

GallerySurface parabolic_catenoid(const FixtureParams& p) {
  const double c = fixed_c(p, -1.0, "parabolic-catenoid");
  GallerySurface g{"parabolic-catenoid",
                   MetricChart::conformal(
                       ScalarField::analytic([](const Jet& u, const Jet&) { return 1.0 / cos(u); }), kParabolicDomain, c),
                   c};
  const ScalarField mu = translated_catenoid_angle(p.t);
  g.angle_closures = {{"mu", mu}, {"-mu", mu.negated()}};
  g.K_closed_form = ScalarField::constant(-1.0);
  g.tags = {"constant-curvature", "associate-of-helicoid"};
  return g;
}

GallerySurface catenoid(const FixtureParams& p) {
  if (!(p.beta * p.beta > 1.0)) throw ConfigError("catenoid needs beta^2 > 1");
  const double b2 = p.beta * p.beta;
  const double c = fixed_c(p, -1.0, "catenoid");
  GallerySurface g{"catenoid",
                   MetricChart::warped_product(ScalarField::analytic([b2](const Jet& u, const Jet&) {
                                                 return sqrt(b2 * square(sinh(u)) + 1.0);
                                               }),
                                               Rect{0.1, 2.0, -1.0, 1.0}, c),
                   c};
  // K = -g''/(2g) + g'^2/(4g^2) with g = Lambda^2.
  g.K_closed_form = ScalarField::analytic([b2](const Jet& u, const Jet&) {
    const Jet gg = b2 * square(sinh(u)) + 1.0;
    return -b2 * cosh(2.0 * u) / gg + b2 * b2 * square(sinh(2.0 * u)) / (4.0 * gg * gg);
  });
  g.tags = {"rotational"};
  return g;
}

GallerySurface unduloid(const FixtureParams& p) {
  if (p.beta == 0.0) throw ConfigError("unduloid needs beta != 0");
  const double b2 = p.beta * p.beta;
  const double c = fixed_c(p, 1.0, "unduloid");
  GallerySurface g{"unduloid",
                   MetricChart::warped_product(ScalarField::analytic([b2](const Jet& u, const Jet&) {
                                                 return sqrt(b2 * square(sin(u)) + 1.0);
                                               }),
                                               Rect{0.1, 1.45, -1.0, 1.0}, c),
                   c};
  g.K_closed_form = ScalarField::analytic([b2](const Jet& u, const Jet&) {
    const Jet gg = b2 * square(sin(u)) + 1.0;
    return -b2 * cos(2.0 * u) / gg + b2 * b2 * square(sin(2.0 * u)) / (4.0 * gg * gg);
  });
  g.tags = {"rotational"};
  return g;
}

GallerySurface saearp(const FixtureParams& p) {
  const double d2 = p.d * p.d;
  const double l2 = p.l * p.l;
  if (!(d2 > 1.0)) throw ConfigError("saearp needs d^2 > 1");
  const double c = fixed_c(p, -1.0, "saearp");
  auto lambda = [d2, l2](const Jet& u) { return sqrt((d2 - 1.0) * square(cosh(u)) + l2 + 1.0); };
  GallerySurface g{"saearp",
                   MetricChart::warped_product(
                       ScalarField::analytic([lambda](const Jet& u, const Jet&) { return lambda(u); }),
                       Rect{-1.2, 1.2, -1.0, 1.0}, c),
                   c};
  const double k = std::sqrt(d2 - 1.0);
  const ScalarField nu =
      ScalarField::analytic([lambda, k](const Jet& u, const Jet&) { return k * cosh(u) / lambda(u); });
  const ScalarField nu_bar =
      ScalarField::analytic([lambda, k](const Jet& u, const Jet&) { return k * sinh(u) / lambda(u); });
  g.angle_closures = {{"nu", nu}, {"nu_bar", nu_bar}, {"-nu", nu.negated()}, {"-nu_bar", nu_bar.negated()}};
  g.K_closed_form = ScalarField::analytic([lambda, d2, l2](const Jet& u, const Jet&) {
    return -1.0 + (l2 + 1.0) * (d2 + l2) / pow(lambda(u), 4.0);
  });
  g.tags = {"screw-motion", "isometric-non-associate-pair"};
  return g;
}

GallerySurface horizontal_slice(const FixtureParams& p) {
  const double c = p.c.value_or(-1.0);
  if (c == 0.0) throw ConfigError("c must be non-zero");
  const double r = std::sqrt(std::abs(c));
  const double half = c < 0.0 ? 1.0 : std::min(1.0, 0.45 * std::numbers::pi / r);
  ScalarField profile = c < 0.0 ? ScalarField::analytic([r](const Jet& u, const Jet&) { return cosh(r * u); })
                                : ScalarField::analytic([r](const Jet& u, const Jet&) { return cos(r * u); });
  GallerySurface g{"horizontal-slice", MetricChart::warped_product(profile, Rect{-half, half, -1.0, 1.0}, c), c};
  g.angle_closures = {{"one", ScalarField::constant(1.0)}, {"-one", ScalarField::constant(-1.0)}};
  g.K_closed_form = ScalarField::constant(c);
  g.tags = {"totally-geodesic", "constant-curvature", "constant-angle"};
  return g;
}

GallerySurface vertical_plane(const FixtureParams& p) {
  const double c = p.c.value_or(-1.0);
  if (c == 0.0) throw ConfigError("c must be non-zero");
  GallerySurface g{"vertical-plane",
                   MetricChart::warped_product(ScalarField::constant(1.0), Rect{-1.0, 1.0, -1.0, 1.0}, c), c};
  g.angle_closures = {{"zero", ScalarField::constant(0.0)}};
  g.K_closed_form = ScalarField::constant(0.0);
  g.tags = {"totally-geodesic", "constant-curvature", "constant-angle", "flat"};
  return g;
}

}  // namespace

bool GallerySurface::has_tag(std::string_view tag) const {
  for (const auto& t : tags)
    if (t == tag) return true;
  return false;
}

const ScalarField& GallerySurface::angle(std::string_view n) const {
  for (const auto& a : angle_closures)
    if (a.name == n) return a.nu;
  throw ConfigError("fixture " + name + " has no angle closure named '" + std::string(n) + "'");
}

AngleField GallerySurface::angle_field(std::string_view n) const { return {chart, angle(n)}; }

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names{"parabolic-catenoid", "catenoid",         "unduloid",
                                              "saearp",             "horizontal-slice", "vertical-plane"};
  return names;
}

GallerySurface fixture(std::string_view name, const FixtureParams& params) {
  if (name == "parabolic-catenoid") return parabolic_catenoid(params);
  if (name == "catenoid") return catenoid(params);
  if (name == "unduloid") return unduloid(params);
  if (name == "saearp") return saearp(params);
  if (name == "horizontal-slice") return horizontal_slice(params);
  if (name == "vertical-plane") return vertical_plane(params);
  throw ConfigError("unknown fixture '" + std::string(name) + "'");
}

namespace {

// Strip coordinates z = v + i u  ->  upper half-plane zeta = i e^z.
cplx to_half_plane(ChartPoint p) { return cplx(0.0, 1.0) * std::exp(cplx(p.v, p.u)); }

cplx translate_half_plane(double t, cplx zeta) {
  const double a = std::cosh(0.5 * t);
  const double b = std::sinh(0.5 * t);
  return (a * zeta + b) / (b * zeta + a);
}

}  // namespace

ChartPoint hyperbolic_translation(double t, ChartPoint p) {
  const cplx w = cplx(0.0, -1.0) * translate_half_plane(t, to_half_plane(p));
  return {std::arg(w), std::log(std::abs(w))};
}

double translation_metric_ratio(double t, ChartPoint p) {
  const double b = std::sinh(0.5 * t);
  const double a = std::cosh(0.5 * t);
  const cplx zeta = to_half_plane(p);
  const cplx moved = translate_half_plane(t, zeta);
  const cplx dz = zeta / ((b * zeta + a) * (b * zeta + a) * moved);
  const ChartPoint q = hyperbolic_translation(t, p);
  const double cu = std::cos(p.u);
  const double cq = std::cos(q.u);
  return std::norm(dz) * cu * cu / (cq * cq);
}

ScalarField translated_catenoid_angle(double t) {
  const double ch = std::cosh(t);
  const double sh = std::sinh(t);
  return ScalarField::analytic([ch, sh](const Jet& u, const Jet& v) {
    const Jet num = ch * sin(u) - sh * cosh(v);
    return num / sqrt(square(num) + square(cos(u)));
  });
}

std::optional<double> match_translated_catenoid(const ScalarField& nu, const Rect& domain, int n, double tol) {
  const double a = nu(0.0, 0.0);
  if (!(std::abs(a) < 1.0)) return std::nullopt;
  const double t = -std::atanh(a);
  const ScalarField ref = translated_catenoid_angle(t);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double u = domain.u_min + (domain.u_max - domain.u_min) * i / (n - 1);
      const double v = domain.v_min + (domain.v_max - domain.v_min) * j / (n - 1);
      if (!(std::abs(nu(u, v) - ref(u, v)) <= tol)) return std::nullopt;
    }
  }
  return t;
}

std::optional<SaEarpPartner> saearp_partner(double l, double d, double d_bar) {
  if (!(d * d > 1.0)) throw DomainError("saearp_partner needs d^2 > 1");
  const double l_bar_sq = (1.0 - d_bar * d_bar) * (l * l + 1.0) / (d * d - 1.0) - d_bar * d_bar;
  if (l_bar_sq < 0.0) return std::nullopt;
  return SaEarpPartner{std::sqrt(l_bar_sq), d_bar};
}

std::vector<SaEarpPartner> saearp_partner_family(double l, double d, int samples) {
  std::vector<SaEarpPartner> out;
  for (int k = 1; k <= samples; ++k) {
    const double d_bar = -1.0 + 2.0 * k / (samples + 1);
    if (auto p = saearp_partner(l, d, d_bar)) out.push_back(*p);
  }
  return out;
}

}  // namespace isomin::gallery
