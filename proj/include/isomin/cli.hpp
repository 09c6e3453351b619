#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "isomin/gallery.hpp"
#include "isomin/surface.hpp"

namespace isomin::cli {

enum ExitCode : int { kPass = 0, kResidualFailure = 1, kConfigError = 2, kEvaluationError = 3 };

// Named analytic profile for charts not in the gallery. Templates (a, b are
// params[0], params[1]):
//   warped:    sqrt-sinh2  sqrt(a sinh^2 u + b)    sqrt-sin2  sqrt(a sin^2 u + b)
//              sqrt-cosh2  sqrt(a cosh^2 u + b)    cosh       a cosh(b u)
//              cos         a cos(b u)              constant   a
//   conformal: sec         a / cos(b u)            cosh       a cosh(b u)
//              constant    a
struct InlineChart {
  std::string kind = "warped";  // warped | conformal
  std::string profile;
  std::vector<double> params;
  Rect domain{-1.0, 1.0, -1.0, 1.0};
  double c = -1.0;
};

struct SurfaceConfig {
  std::string name;  // fixture name; empty when inline is set
  gallery::FixtureParams params;
  std::optional<InlineChart> inline_chart;
  std::string angle;  // closure name or "const:<a>"; empty picks the first closure
};

struct GridConfig {
  int nu = 101;
  int nv = 101;
  std::optional<Rect> domain;
  int substeps = 0;
};

struct Tolerances {
  double grad_eps = 1e-10;
  double m1 = 1e-8;
  double m2 = 1e-8;
  double m3 = 1e-7;
  double e2 = 1e-7;
  double q = 1e-6;
  double compat = 1e-7;
  double m1_filter = 1e-8;
  double drift = 1e-5;
  double metric = 1e-5;
  double mean_curvature = 5e-4;
  double normal_angle = 1e-6;
  double shape = 1e-3;
  double ricci_identity = 1e-12;
};

struct OutputConfig {
  std::string path;
  std::string format = "report-json";  // csv | obj | report-json
};

struct RunConfig {
  SurfaceConfig surface;
  GridConfig grid;
  Tolerances tolerances;
  OutputConfig output;
  std::optional<ChartPoint> point;
  double theta = 0.0;
  std::vector<double> thetas;

  // ConfigError on grids below 9 x 9, non-positive tolerances or bad formats.
  void validate() const;
};

// Overlays the fields present in j onto cfg (names as in the structs above).
void apply_json(RunConfig& cfg, const nlohmann::json& j);
RunConfig config_from_json(const nlohmann::json& j);

struct CommandResult {
  nlohmann::json report;
  int exit_code = kPass;
};

CommandResult cmd_verify(const RunConfig& cfg);
CommandResult cmd_roots(const RunConfig& cfg);
CommandResult cmd_reconstruct(const RunConfig& cfg);
CommandResult cmd_associate(const RunConfig& cfg);
CommandResult cmd_ricci(const RunConfig& cfg);

// "pi", "pi/4", "3pi/4", "-0.5", ...
double parse_angle(const std::string& text);
// "a:b:n" -> n evenly spaced values from a to b inclusive.
std::vector<double> parse_angle_range(const std::string& text);

// Full command line (without argv[0]); the report goes to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace isomin::cli
