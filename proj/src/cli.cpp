#include "isomin/cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "isomin/angle.hpp"
#include "isomin/errors.hpp"
#include "isomin/reconstruct.hpp"
#include "isomin/sweep.hpp"

namespace isomin::cli {

using nlohmann::json;

void RunConfig::validate() const {
  if (grid.nu < 9 || grid.nv < 9) throw ConfigError("grid must be at least 9x9");
  if (grid.substeps < 0) throw ConfigError("substeps must be >= 0");
  const Tolerances& t = tolerances;
  for (double x : {t.grad_eps, t.m1, t.m2, t.m3, t.e2, t.q, t.compat, t.m1_filter, t.drift, t.metric,
                   t.mean_curvature, t.normal_angle, t.shape, t.ricci_identity}) {
    if (!(x > 0.0)) throw ConfigError("tolerances must be positive");
  }
  if (output.format != "csv" && output.format != "obj" && output.format != "report-json") {
    throw ConfigError("unknown output format '" + output.format + "' (csv | obj | report-json)");
  }
  if (surface.name.empty() && !surface.inline_chart) throw ConfigError("no surface given");
}

namespace {

Rect rect_from_json(const json& j) {
  if (!j.is_array() || j.size() != 4) throw ConfigError("domain must be [u_min, u_max, v_min, v_max]");
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>(), j[3].get<double>()};
}

template <class T>
void maybe(const json& j, const char* key, T& out) {
  if (j.contains(key)) out = j.at(key).get<T>();
}

void check_keys(const json& j, std::initializer_list<const char*> allowed, const char* where) {
  if (!j.is_object()) throw ConfigError(std::string(where) + " must be a JSON object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* k) { return it.key() == k; })) {
      throw ConfigError("unknown key '" + it.key() + "' in " + where);
    }
  }
}

}  // namespace

void apply_json(RunConfig& cfg, const json& j) {
  try {
    check_keys(j, {"surface", "grid", "tolerances", "output", "point", "theta", "thetas"}, "config");
    if (j.contains("surface")) {
      const json& s = j.at("surface");
      check_keys(s, {"name", "params", "angle", "inline_chart"}, "surface");
      maybe(s, "name", cfg.surface.name);
      if (s.contains("params")) {
        const json& q = s.at("params");
        check_keys(q, {"l", "d", "beta", "t", "c"}, "surface.params");
        maybe(q, "l", cfg.surface.params.l);
        maybe(q, "d", cfg.surface.params.d);
        maybe(q, "beta", cfg.surface.params.beta);
        maybe(q, "t", cfg.surface.params.t);
        if (q.contains("c")) cfg.surface.params.c = q.at("c").get<double>();
      }
      maybe(s, "angle", cfg.surface.angle);
      if (s.contains("inline_chart")) {
        const json& in = s.at("inline_chart");
        check_keys(in, {"kind", "profile", "params", "domain", "c"}, "surface.inline_chart");
        InlineChart chart;
        maybe(in, "kind", chart.kind);
        maybe(in, "profile", chart.profile);
        maybe(in, "params", chart.params);
        if (in.contains("domain")) chart.domain = rect_from_json(in.at("domain"));
        maybe(in, "c", chart.c);
        cfg.surface.inline_chart = chart;
      }
    }
    if (j.contains("grid")) {
      const json& g = j.at("grid");
      check_keys(g, {"nu", "nv", "domain", "substeps"}, "grid");
      maybe(g, "nu", cfg.grid.nu);
      maybe(g, "nv", cfg.grid.nv);
      maybe(g, "substeps", cfg.grid.substeps);
      if (g.contains("domain")) cfg.grid.domain = rect_from_json(g.at("domain"));
    }
    if (j.contains("tolerances")) {
      const json& t = j.at("tolerances");
      check_keys(t, {"grad_eps", "m1", "m2", "m3", "e2", "q", "compat", "m1_filter", "drift", "metric",
                     "mean_curvature", "normal_angle", "shape", "ricci_identity"},
                 "tolerances");
      Tolerances& o = cfg.tolerances;
      maybe(t, "grad_eps", o.grad_eps);
      maybe(t, "m1", o.m1);
      maybe(t, "m2", o.m2);
      maybe(t, "m3", o.m3);
      maybe(t, "e2", o.e2);
      maybe(t, "q", o.q);
      maybe(t, "compat", o.compat);
      maybe(t, "m1_filter", o.m1_filter);
      maybe(t, "drift", o.drift);
      maybe(t, "metric", o.metric);
      maybe(t, "mean_curvature", o.mean_curvature);
      maybe(t, "normal_angle", o.normal_angle);
      maybe(t, "shape", o.shape);
      maybe(t, "ricci_identity", o.ricci_identity);
    }
    if (j.contains("output")) {
      const json& o = j.at("output");
      check_keys(o, {"path", "format"}, "output");
      maybe(o, "path", cfg.output.path);
      maybe(o, "format", cfg.output.format);
    }
    if (j.contains("point")) {
      const json& p = j.at("point");
      if (!p.is_array() || p.size() != 2) throw ConfigError("point must be [u, v]");
      cfg.point = ChartPoint{p[0].get<double>(), p[1].get<double>()};
    }
    maybe(j, "theta", cfg.theta);
    maybe(j, "thetas", cfg.thetas);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
}

RunConfig config_from_json(const json& j) {
  RunConfig cfg;
  apply_json(cfg, j);
  return cfg;
}

double parse_angle(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw ConfigError("empty angle");
  auto number = [&](const std::string& t) {
    std::size_t used = 0;
    double x = 0.0;
    try {
      x = std::stod(t, &used);
    } catch (const std::exception&) {
      throw ConfigError("bad angle '" + text + "'");
    }
    if (used != t.size()) throw ConfigError("bad angle '" + text + "'");
    return x;
  };
  const std::size_t at = s.find("pi");
  if (at == std::string::npos) return number(s);
  const std::string head = s.substr(0, at);
  const std::string tail = s.substr(at + 2);
  double coef = 1.0;
  if (head == "-") {
    coef = -1.0;
  } else if (!head.empty() && head != "+") {
    std::string h = head;
    if (h.back() == '*') h.pop_back();
    coef = number(h);
  }
  double den = 1.0;
  if (!tail.empty()) {
    if (tail[0] != '/') throw ConfigError("bad angle '" + text + "'");
    den = number(tail.substr(1));
    if (den == 0.0) throw ConfigError("bad angle '" + text + "'");
  }
  return coef * std::numbers::pi / den;
}

std::vector<double> parse_angle_range(const std::string& text) {
  const std::size_t a = text.find(':');
  const std::size_t b = a == std::string::npos ? a : text.find(':', a + 1);
  if (b == std::string::npos) throw ConfigError("--thetas expects a:b:n");
  const double lo = parse_angle(text.substr(0, a));
  const double hi = parse_angle(text.substr(a + 1, b - a - 1));
  int n = 0;
  try {
    n = std::stoi(text.substr(b + 1));
  } catch (const std::exception&) {
    throw ConfigError("--thetas expects an integer count");
  }
  if (n < 1) throw ConfigError("--thetas count must be >= 1");
  std::vector<double> out;
  for (int k = 0; k < n; ++k) out.push_back(n == 1 ? lo : lo + (hi - lo) * k / (n - 1));
  return out;
}

namespace {

ScalarField inline_profile(const InlineChart& in) {
  const auto& p = in.params;
  auto param = [&](std::size_t k, double fallback) { return k < p.size() ? p[k] : fallback; };
  const double a = param(0, 1.0);
  const double b = param(1, 1.0);
  const std::string& t = in.profile;
  if (in.kind == "warped") {
    if (t == "sqrt-sinh2") return ScalarField::analytic([a, b](const Jet& u, const Jet&) { return sqrt(a * square(sinh(u)) + b); });
    if (t == "sqrt-sin2") return ScalarField::analytic([a, b](const Jet& u, const Jet&) { return sqrt(a * square(sin(u)) + b); });
    if (t == "sqrt-cosh2") return ScalarField::analytic([a, b](const Jet& u, const Jet&) { return sqrt(a * square(cosh(u)) + b); });
    if (t == "cosh") return ScalarField::analytic([a, b](const Jet& u, const Jet&) { return a * cosh(b * u); });
    if (t == "cos") return ScalarField::analytic([a, b](const Jet& u, const Jet&) { return a * cos(b * u); });
    if (t == "constant") return ScalarField::constant(a);
  } else if (in.kind == "conformal") {
    if (t == "sec") return ScalarField::analytic([a, b](const Jet& u, const Jet&) { return a / cos(b * u); });
    if (t == "cosh") return ScalarField::analytic([a, b](const Jet& u, const Jet&) { return a * cosh(b * u); });
    if (t == "constant") return ScalarField::constant(a);
  } else {
    throw ConfigError("inline chart kind must be warped or conformal");
  }
  throw ConfigError("unknown " + in.kind + " profile template '" + t + "'");
}

struct Resolved {
  std::string label;
  MetricChart chart;
  std::string angle_name;
  std::optional<ScalarField> nu;
};

Resolved resolve(const RunConfig& cfg) {
  cfg.validate();
  const SurfaceConfig& s = cfg.surface;
  std::optional<gallery::GallerySurface> fix;
  std::optional<MetricChart> chart;
  std::string label;
  if (s.inline_chart) {
    const InlineChart& in = *s.inline_chart;
    ScalarField prof = inline_profile(in);
    try {
      chart = in.kind == "warped" ? MetricChart::warped_product(prof, in.domain, in.c)
                                  : MetricChart::conformal(prof, in.domain, in.c);
    } catch (const DomainError& e) {
      throw ConfigError(std::string("inline chart: ") + e.what());
    }
    label = "inline:" + in.kind + ":" + in.profile;
  } else {
    fix = gallery::fixture(s.name, s.params);
    chart = fix->chart;
    label = s.name;
  }
  if (cfg.grid.domain) {
    try {
      chart = chart->with_domain(*cfg.grid.domain);
    } catch (const DomainError& e) {
      throw ConfigError(std::string("domain override: ") + e.what());
    }
  }

  Resolved r{label, *chart, "", std::nullopt};
  if (s.angle.rfind("const:", 0) == 0) {
    double a = 0.0;
    try {
      a = std::stod(s.angle.substr(6));
    } catch (const std::exception&) {
      throw ConfigError("bad constant angle '" + s.angle + "'");
    }
    r.angle_name = s.angle;
    r.nu = ScalarField::constant(a);
  } else if (!s.angle.empty()) {
    if (!fix) throw ConfigError("inline charts only accept const:<a> angles");
    r.nu = fix->angle(s.angle);
    r.angle_name = s.angle;
  } else if (fix && !fix->angle_closures.empty()) {
    r.nu = fix->angle_closures.front().nu;
    r.angle_name = fix->angle_closures.front().name;
  }
  return r;
}

SampleGrid sample_grid(const RunConfig& cfg, const MetricChart& chart) {
  return {chart.domain(), cfg.grid.nu, cfg.grid.nv};
}

json stats_json(const ResidualStats& s, double threshold, bool& all_pass) {
  json j;
  if (s.count == 0) {
    j["skipped"] = true;
    j["pass"] = true;
    return j;
  }
  const bool pass = s.max_abs <= threshold;
  all_pass = all_pass && pass;
  j["max"] = s.max_abs;
  j["mean"] = s.mean_abs();
  j["count"] = s.count;
  j["threshold"] = threshold;
  j["pass"] = pass;
  return j;
}

json rect_json(const Rect& r) { return json::array({r.u_min, r.u_max, r.v_min, r.v_max}); }

AngleField require_field(const Resolved& r) {
  if (!r.nu) throw ConfigError(r.label + " has no angle closure; pass --angle const:<a> or use `roots`");
  return {r.chart, *r.nu};
}

}  // namespace

CommandResult cmd_verify(const RunConfig& cfg) {
  const Resolved r = resolve(cfg);
  const AngleField field = require_field(r);
  const SampleGrid grid = sample_grid(cfg, r.chart);
  const Tolerances& t = cfg.tolerances;
  const FieldResiduals res = residual_sweep(field, grid);

  json rep;
  rep["command"] = "verify";
  rep["surface"] = r.label;
  rep["angle"] = r.angle_name;
  rep["c"] = r.chart.c();
  rep["domain"] = rect_json(r.chart.domain());
  rep["grid"] = {grid.nu, grid.nv};
  bool pass = true;
  json& resid = rep["residuals"];
  resid["M1"] = stats_json(res.m1, t.m1, pass);
  resid["M2"] = stats_json(res.m2, t.m2, pass);
  resid["M3"] = stats_json(res.m3, t.m3, pass);
  resid["E2-2"] = stats_json(res.e22, t.e2, pass);
  resid["E2-3"] = stats_json(res.e23, t.e2, pass);
  resid["Q"] = stats_json(res.q, t.q, pass);
  if (res.e2_skipped == grid.nu * grid.nv) rep["branch"] = "constant-angle";
  if (res.q_skipped == grid.nu * grid.nv) rep["obstruction"] = "undefined: grad K = 0 on the grid";

  double max_nu_sq = 0.0;
  for (int i = 0; i < grid.nu; ++i)
    for (int j = 0; j < grid.nv; ++j) max_nu_sq = std::max(max_nu_sq, std::pow(field.nu(grid.node(i, j)), 2));
  if (!pass) {
    rep["compat"] = {{"skipped", "angle residuals failed"}};
  } else if (max_nu_sq > 1.0 - 1e-4) {
    rep["compat"] = {{"skipped", "nu^2 reaches 1 (no tangential part)"}};
  } else {
    GridSpec gs = GridSpec::over(grid.domain, grid.nu, grid.nv);
    const ThetaField theta = solve_theta(field, gs);
    const GaussCodazziData data = build_data(field, theta);
    const CompatStats cs = compat_sweep(data, grid);
    json& c = rep["compat"];
    c["C1"] = stats_json(cs.c1, t.compat, pass);
    c["C2"] = stats_json(cs.c2, t.compat, pass);
    c["C3"] = stats_json(cs.c3, t.compat, pass);
    c["C4"] = stats_json(cs.c4, t.compat, pass);
    c["C5"] = stats_json(cs.c5, t.compat, pass);
    c["theta_max_curl"] = theta.max_curl();
  }
  rep["pass"] = pass;
  return {rep, pass ? kPass : kResidualFailure};
}

CommandResult cmd_roots(const RunConfig& cfg) {
  const Resolved r = resolve(cfg);
  const Rect& d = r.chart.domain();
  const ChartPoint p = cfg.point.value_or(ChartPoint{0.5 * (d.u_min + d.u_max), 0.5 * (d.v_min + d.v_max)});
  r.chart.require_inside(p);
  CandidateOptions opt;
  opt.m1_tol = cfg.tolerances.m1_filter;
  opt.grad_eps = cfg.tolerances.grad_eps;
  const CandidateReport cr = candidate_angles(r.chart, p, opt);

  json rep;
  rep["command"] = "roots";
  rep["surface"] = r.label;
  rep["c"] = r.chart.c();
  rep["point"] = {p.u, p.v};
  rep["K"] = cr.jet.K;
  rep["grad_K_norm"] = cr.jet.normGradK;
  auto coeffs = [](const Polynomial<double>& q) { return json(q.coeffs()); };
  rep["coefficients"] = {{"A", coeffs(cr.coeffs.A)},
                         {"E", coeffs(cr.coeffs.E)},
                         {"F", coeffs(cr.coeffs.F)},
                         {"Q", coeffs(cr.coeffs.Q)},
                         {"Q_scale", cr.coeffs.scale()}};
  json cands = json::array();
  for (const Candidate& c : cr.candidates) {
    json cj;
    cj["nu"] = c.nu;
    cj["admissible"] = c.admissible;
    cj["m1_propagated"] = c.m1_propagated;
    cj["m1_branch"] = c.m1_branch;
    cj["grad_propagated"] = {c.grad_propagated[0], c.grad_propagated[1]};
    if (!c.rejection.empty()) cj["rejection"] = c.rejection;
    cands.push_back(cj);
  }
  rep["raw_count"] = cr.candidates.size();
  rep["candidates"] = cands;
  rep["admissible"] = cr.admissible();
  if (!cfg.surface.inline_chart) {
    const gallery::GallerySurface g = gallery::fixture(cfg.surface.name, cfg.surface.params);
    json closures = json::object();
    for (const auto& a : g.angle_closures) closures[a.name] = a.nu(p);
    if (!closures.empty()) rep["closures"] = closures;
  }
  rep["pass"] = true;
  return {rep, kPass};
}

namespace {

struct MemberCheck {
  json report;
  bool pass = true;
};

MemberCheck check_member(const AssociateMember& m, const Tolerances& t) {
  const ImmersionReport ir = verify_immersion(m.immersion, m.data);
  MemberCheck out;
  json& j = out.report;
  j["theta"] = m.assoc_angle;
  j["metric_rel_error"] = ir.metric_rel_error;
  j["shape_error"] = ir.shape_error;
  j["mean_curvature"] = ir.mean_curvature;
  j["gram_drift"] = ir.gram_drift;
  j["normal_angle_error"] = ir.normal_angle_error;
  j["height_error"] = ir.height_error;
  j["quadric_error"] = ir.quadric_error;
  j["tangency_error"] = ir.tangency_error;
  out.pass = ir.metric_rel_error <= t.metric && ir.mean_curvature <= t.mean_curvature &&
             ir.normal_angle_error <= t.normal_angle && ir.gram_drift <= t.drift && ir.shape_error <= t.shape;
  j["pass"] = out.pass;
  return out;
}

std::string member_path(const std::string& path, std::size_t k, std::size_t count) {
  if (count == 1) return path;
  const std::filesystem::path p(path);
  std::ostringstream name;
  name << p.stem().string() << "_" << k << p.extension().string();
  return (p.parent_path() / name.str()).string();
}

void write_member(const RunConfig& cfg, const ImmersionGrid& imm, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw ConfigError("cannot open '" + path + "' for writing");
  if (cfg.output.format == "csv") write_csv(os, imm);
  else write_obj(os, imm);
}

CommandResult run_members(const RunConfig& cfg, const std::vector<double>& angles, const char* command,
                          bool family_checks) {
  const Resolved r = resolve(cfg);
  const AngleField field = require_field(r);
  GridSpec gs = GridSpec::over(r.chart.domain(), cfg.grid.nu, cfg.grid.nv);
  gs.substeps = cfg.grid.substeps;
  ReconstructOptions opt;
  opt.integration.drift_limit = cfg.tolerances.drift;
  const std::vector<AssociateMember> members = associate_sweep(field, angles, gs, opt);

  json rep;
  rep["command"] = command;
  rep["surface"] = r.label;
  rep["angle"] = r.angle_name;
  rep["signature"] = AmbientModel::for_curvature(r.chart.c()).signature();
  rep["grid"] = {gs.nu, gs.nv};
  rep["steps_per_interval"] = gs.steps_per_interval();
  bool pass = true;
  json list = json::array();
  std::vector<std::string> files;
  for (std::size_t k = 0; k < members.size(); ++k) {
    MemberCheck mc = check_member(members[k], cfg.tolerances);
    pass = pass && mc.pass;
    if (!cfg.output.path.empty() && cfg.output.format != "report-json") {
      const std::string path = member_path(cfg.output.path, k, members.size());
      write_member(cfg, members[k].immersion, path);
      mc.report["file"] = path;
      files.push_back(path);
    }
    list.push_back(mc.report);
  }
  rep["members"] = list;

  if (family_checks && !members.empty()) {
    const ImmersionGrid& ref = members.front().immersion;
    json fam;
    double nu_spread = 0.0;
    for (const AssociateMember& m : members) {
      for (std::size_t n = 0; n < ref.states.size(); ++n) {
        nu_spread = std::max(nu_spread, std::abs(m.immersion.states[n].N[3] - ref.states[n].N[3]));
      }
    }
    fam["nu_spread"] = nu_spread;
    const bool nu_ok = nu_spread <= cfg.tolerances.normal_angle;
    pass = pass && nu_ok;
    auto zero = std::find_if(members.begin(), members.end(), [](const AssociateMember& m) { return m.assoc_angle == 0.0; });
    auto half = std::find_if(members.begin(), members.end(), [](const AssociateMember& m) {
      return std::abs(m.assoc_angle - std::numbers::pi) < 1e-12;
    });
    if (zero != members.end() && half != members.end()) {
      std::vector<double> a, b;
      const double h0 = zero->immersion.at(gs.bi(), gs.bj()).h;
      const double hp = half->immersion.at(gs.bi(), gs.bj()).h;
      for (std::size_t n = 0; n < ref.states.size(); ++n) {
        a.push_back(std::abs(zero->immersion.states[n].h - h0));
        b.push_back(std::abs(half->immersion.states[n].h - hp));
      }
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      double gap = 0.0;
      for (std::size_t n = 0; n < a.size(); ++n) gap = std::max(gap, std::abs(a[n] - b[n]));
      fam["reflection_height_gap"] = gap;
      const bool ok = gap <= cfg.tolerances.metric;
      fam["reflection_pass"] = ok;
      pass = pass && ok;
    }
    rep["family"] = fam;
  }
  rep["pass"] = pass;
  if (!cfg.output.path.empty() && cfg.output.format == "report-json") {
    std::ofstream os(cfg.output.path);
    if (!os) throw ConfigError("cannot open '" + cfg.output.path + "' for writing");
    os << rep.dump(2) << "\n";
  }
  return {rep, pass ? kPass : kResidualFailure};
}

}  // namespace

CommandResult cmd_reconstruct(const RunConfig& cfg) {
  const std::vector<double> angles = cfg.thetas.empty() ? std::vector<double>{cfg.theta} : cfg.thetas;
  return run_members(cfg, angles, "reconstruct", false);
}

CommandResult cmd_associate(const RunConfig& cfg) {
  const double pi = std::numbers::pi;
  const std::vector<double> angles = cfg.thetas.empty() ? std::vector<double>{0.0, pi / 4, pi / 2, pi} : cfg.thetas;
  return run_members(cfg, angles, "associate", true);
}

CommandResult cmd_ricci(const RunConfig& cfg) {
  const Resolved r = resolve(cfg);
  const SampleGrid grid = sample_grid(cfg, r.chart);
  const RicciStats s = ricci_sweep(r.chart, grid);
  json rep;
  rep["command"] = "ricci";
  rep["surface"] = r.label;
  rep["grid"] = {grid.nu, grid.nv};
  rep["ricci"] = {{"max_abs", s.ricci.max_abs}, {"mean_abs", s.ricci.mean_abs()}, {"min", s.ricci.min},
                  {"max", s.ricci.max}};
  const bool ok = s.reduction_gap.max_abs <= cfg.tolerances.ricci_identity;
  rep["c_to_zero_identity"] = {{"max_gap", s.reduction_gap.max_abs},
                               {"threshold", cfg.tolerances.ricci_identity},
                               {"pass", ok}};
  rep["pass"] = ok;
  return {rep, ok ? kPass : kResidualFailure};
}

namespace {

std::pair<int, int> parse_grid(const std::string& text) {
  const std::size_t x = text.find_first_of("xX");
  if (x == std::string::npos) throw ConfigError("--grid expects NxM");
  try {
    std::size_t a = 0, b = 0;
    const int n = std::stoi(text.substr(0, x), &a);
    const int m = std::stoi(text.substr(x + 1), &b);
    if (a != x || b != text.size() - x - 1) throw ConfigError("--grid expects NxM");
    return {n, m};
  } catch (const std::logic_error&) {
    throw ConfigError("--grid expects NxM");
  }
}

ChartPoint parse_point(const std::string& text) {
  const std::size_t comma = text.find(',');
  if (comma == std::string::npos) throw ConfigError("--point expects u,v");
  try {
    return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
  } catch (const std::logic_error&) {
    throw ConfigError("--point expects u,v");
  }
}

std::string format_from_path(const std::string& path) {
  const std::string ext = std::filesystem::path(path).extension().string();
  if (ext == ".csv") return "csv";
  if (ext == ".obj") return "obj";
  return "report-json";
}

struct Flags {
  std::string surface, grid, theta, thetas, out, format, config, angle, point;
  double l = 0, d = 0, beta = 0, t = 0, c = 0;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimal isometric immersions into S^2 x R and H^2 x R"};
  app.require_subcommand(1);
  Flags f;
  struct Opts {
    CLI::Option *l, *d, *beta, *t, *c;
  };
  std::vector<Opts> numeric;
  for (const char* name : {"verify", "roots", "reconstruct", "associate", "ricci"}) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--surface", f.surface, "fixture name");
    Opts o{};
    o.l = sub->add_option("--l", f.l, "Sa Earp l");
    o.d = sub->add_option("--d", f.d, "Sa Earp d");
    o.beta = sub->add_option("--beta", f.beta, "catenoid / unduloid beta");
    o.t = sub->add_option("--t", f.t, "translation parameter");
    o.c = sub->add_option("--c", f.c, "ambient curvature");
    numeric.push_back(o);
    sub->add_option("--grid", f.grid, "NxM nodes");
    sub->add_option("--theta", f.theta, "associate angle");
    sub->add_option("--thetas", f.thetas, "a:b:n associate angles");
    sub->add_option("--out", f.out, "output path");
    sub->add_option("--format", f.format, "csv | obj | report-json");
    sub->add_option("--config", f.config, "JSON RunConfig");
    sub->add_option("--angle", f.angle, "angle closure name or const:<a>");
    sub->add_option("--point", f.point, "u,v for roots");
  }

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kConfigError;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  std::size_t idx = 0;
  for (const char* name : {"verify", "roots", "reconstruct", "associate", "ricci"}) {
    if (command == name) break;
    ++idx;
  }
  const Opts& o = numeric[idx];

  try {
    RunConfig cfg;
    if (!f.config.empty()) {
      std::ifstream is(f.config);
      if (!is) throw ConfigError("cannot read config '" + f.config + "'");
      json j;
      try {
        j = json::parse(is);
      } catch (const json::exception& e) {
        throw ConfigError(std::string("config parse error: ") + e.what());
      }
      apply_json(cfg, j);
    }
    if (!f.surface.empty()) {
      cfg.surface.name = f.surface;
      cfg.surface.inline_chart.reset();
    }
    if (o.l->count()) cfg.surface.params.l = f.l;
    if (o.d->count()) cfg.surface.params.d = f.d;
    if (o.beta->count()) cfg.surface.params.beta = f.beta;
    if (o.t->count()) cfg.surface.params.t = f.t;
    if (o.c->count()) cfg.surface.params.c = f.c;
    if (!f.angle.empty()) cfg.surface.angle = f.angle;
    if (!f.grid.empty()) std::tie(cfg.grid.nu, cfg.grid.nv) = parse_grid(f.grid);
    if (!f.theta.empty()) cfg.theta = parse_angle(f.theta);
    if (!f.thetas.empty()) cfg.thetas = parse_angle_range(f.thetas);
    if (!f.point.empty()) cfg.point = parse_point(f.point);
    if (!f.out.empty()) {
      cfg.output.path = f.out;
      if (f.format.empty()) cfg.output.format = format_from_path(f.out);
    }
    if (!f.format.empty()) cfg.output.format = f.format;

    CommandResult res;
    if (command == "verify") res = cmd_verify(cfg);
    else if (command == "roots") res = cmd_roots(cfg);
    else if (command == "reconstruct") res = cmd_reconstruct(cfg);
    else if (command == "associate") res = cmd_associate(cfg);
    else res = cmd_ricci(cfg);
    out << res.report.dump(2) << "\n";
    return res.exit_code;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kEvaluationError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kEvaluationError;
  }
}

}  // namespace isomin::cli
