#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "isomin/cli.hpp"
#include "isomin/errors.hpp"

using namespace isomin;
using namespace isomin::cli;
using nlohmann::json;

namespace {

struct CliRun {
  int code = -1;
  std::string out;
  std::string err;
  json report() const { return json::parse(out); }
};

CliRun run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  CliRun r;
  r.code = run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "isomin_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST(Cli, VerifyParabolicCatenoid) {
  const CliRun r = run_cli({"verify", "--surface", "parabolic-catenoid"});
  ASSERT_EQ(r.code, kPass) << r.err;
  const json j = r.report();
  EXPECT_TRUE(j["pass"].get<bool>());
  for (const auto& [name, stats] : j["residuals"].items())
    if (stats.contains("max")) EXPECT_LT(stats["max"].get<double>(), 1e-8) << name;
}

TEST(Cli, VerifySaEarpPartnerAngle) {
  const CliRun r = run_cli({"verify", "--surface", "saearp", "--l", "1", "--d", "2", "--angle", "nu_bar"});
  EXPECT_EQ(r.code, kPass) << r.err;
}

TEST(Cli, VerifyHorizontalSliceUsesConstantBranch) {
  const CliRun r = run_cli({"verify", "--surface", "horizontal-slice"});
  ASSERT_EQ(r.code, kPass) << r.err;
  EXPECT_EQ(r.report()["branch"], "constant-angle");
}

TEST(Cli, VerifyWrongConstantAngleFails) {
  const CliRun r = run_cli({"verify", "--surface", "vertical-plane", "--angle", "const:0.5"});
  EXPECT_EQ(r.code, kResidualFailure);
  EXPECT_FALSE(r.report()["pass"].get<bool>());
}

TEST(Cli, Roots) {
  CliRun r = run_cli({"roots", "--surface", "saearp", "--l", "1", "--d", "2", "--point", "0.4,0"});
  ASSERT_EQ(r.code, kPass) << r.err;
  EXPECT_EQ(r.report()["admissible"].size(), 4u);
  r = run_cli({"roots", "--surface", "catenoid", "--beta", "2", "--point", "0.5,0"});
  ASSERT_EQ(r.code, kPass) << r.err;
  EXPECT_EQ(r.report()["admissible"].size(), 2u);
  r = run_cli({"roots", "--surface", "parabolic-catenoid", "--point", "0.1,0.1"});
  EXPECT_EQ(r.code, kEvaluationError);
  EXPECT_NE(r.err.find("degenerate: grad K = 0"), std::string::npos) << r.err;
}

TEST(Cli, Ricci) {
  CliRun r = run_cli({"ricci", "--surface", "vertical-plane", "--grid", "11x11"});
  ASSERT_EQ(r.code, kPass) << r.err;
  EXPECT_EQ(r.report()["ricci"]["max_abs"].get<double>(), 0.0);
  r = run_cli({"ricci", "--surface", "parabolic-catenoid", "--grid", "11x11"});
  ASSERT_EQ(r.code, kPass) << r.err;
  EXPECT_NEAR(r.report()["ricci"]["min"].get<double>(), -4.0, 1e-10);
  EXPECT_LT(r.report()["c_to_zero_identity"]["max_gap"].get<double>(), 1e-12);
}

TEST(Cli, ReconstructWritesMesh) {
  const auto path = scratch("pc.obj");
  std::filesystem::remove(path);
  const CliRun r = run_cli({"reconstruct", "--surface", "parabolic-catenoid", "--theta", "0", "--out", path.string()});
  ASSERT_EQ(r.code, kPass) << r.err;
  EXPECT_TRUE(std::filesystem::exists(path));
  EXPECT_LT(r.report()["members"][0]["mean_curvature"].get<double>(), 5e-4);
}

TEST(Cli, ReconstructSweepWritesOneFilePerAngle) {
  const auto path = scratch("sweep.csv");
  json cfg = {{"tolerances", {{"metric", 1e-3}}}};
  const auto cfg_path = scratch("loose.json");
  std::ofstream(cfg_path) << cfg.dump();
  const CliRun s = run_cli({"reconstruct", "--surface", "saearp", "--angle", "nu", "--grid", "21x21", "--thetas",
                         "0:pi:3", "--out", path.string(), "--config", cfg_path.string()});
  ASSERT_EQ(s.code, kPass) << s.err;
  for (int k = 0; k < 3; ++k) EXPECT_TRUE(std::filesystem::exists(scratch("sweep_" + std::to_string(k) + ".csv")));
}

TEST(Cli, ReconstructFlatPoint) {
  const CliRun r = run_cli({"reconstruct", "--surface", "horizontal-slice", "--grid", "11x11"});
  EXPECT_EQ(r.code, kEvaluationError);
}

TEST(Cli, AssociateFamilyChecks) {
  const CliRun r = run_cli({"associate", "--surface", "parabolic-catenoid", "--grid", "101x101"});
  ASSERT_EQ(r.code, kPass) << r.err;
  const json j = r.report();
  EXPECT_EQ(j["members"].size(), 4u);
  EXPECT_LT(j["family"]["reflection_height_gap"].get<double>(), 1e-5);
  EXPECT_LT(j["family"]["nu_spread"].get<double>(), 1e-6);
}

TEST(Cli, ConfigErrors) {
  EXPECT_EQ(run_cli({"verify", "--surface", "helicoid"}).code, kConfigError);
  EXPECT_EQ(run_cli({"verify", "--surface", "catenoid", "--beta", "0.5"}).code, kConfigError);
  EXPECT_EQ(run_cli({"verify", "--surface", "saearp", "--c", "1"}).code, kConfigError);
  EXPECT_EQ(run_cli({"verify", "--surface", "saearp", "--grid", "10by10"}).code, kConfigError);
  EXPECT_EQ(run_cli({"verify", "--surface", "saearp", "--grid", "5x5"}).code, kConfigError);
  EXPECT_EQ(run_cli({"verify", "--surface", "saearp", "--angle", "mu"}).code, kConfigError);
  EXPECT_EQ(run_cli({"verify", "--surface", "saearp", "--format", "png"}).code, kConfigError);
  EXPECT_EQ(run_cli({"frobnicate"}).code, kConfigError);
  EXPECT_EQ(run_cli({}).code, kConfigError);
  const auto bad = scratch("bad.json");
  std::ofstream(bad) << "{\"surface\": {\"name\": \"saearp\", \"colour\": 3}}";
  EXPECT_EQ(run_cli({"verify", "--config", bad.string()}).code, kConfigError);
  std::ofstream(bad) << "{not json";
  EXPECT_EQ(run_cli({"verify", "--config", bad.string()}).code, kConfigError);
}

TEST(Cli, JsonConfigMirrorsFlags) {
  const json j = {{"surface", {{"name", "saearp"}, {"params", {{"l", 1.0}, {"d", 2.0}}}, {"angle", "nu_bar"}}},
                  {"grid", {{"nu", 21}, {"nv", 17}}},
                  {"tolerances", {{"m1", 1e-9}}}};
  const RunConfig cfg = config_from_json(j);
  EXPECT_EQ(cfg.surface.name, "saearp");
  EXPECT_EQ(cfg.surface.angle, "nu_bar");
  EXPECT_EQ(cfg.grid.nv, 17);
  EXPECT_EQ(cfg.tolerances.m1, 1e-9);
  EXPECT_EQ(cfg.tolerances.m2, 1e-8);

  const auto path = scratch("cfg.json");
  std::ofstream(path) << j.dump();
  const CliRun a = run_cli({"verify", "--config", path.string()});
  const CliRun b = run_cli({"verify", "--surface", "saearp", "--l", "1", "--d", "2", "--angle", "nu_bar", "--grid", "21x17"});
  ASSERT_EQ(a.code, kPass) << a.err;
  EXPECT_EQ(a.report()["residuals"]["M2"], b.report()["residuals"]["M2"]);
  EXPECT_EQ(a.report()["residuals"]["M1"]["max"], b.report()["residuals"]["M1"]["max"]);
  EXPECT_EQ(a.report()["residuals"]["M1"]["threshold"].get<double>(), 1e-9);
  // Flags override the file.
  const CliRun c = run_cli({"verify", "--config", path.string(), "--grid", "11x11"});
  EXPECT_EQ(c.report()["grid"], json({11, 11}));
}

TEST(Cli, InlineChart) {
  const json j = {{"surface", {{"inline_chart", {{"kind", "warped"}, {"profile", "cosh"}, {"params", {1.0, 1.0}},
                                                 {"domain", {-1.0, 1.0, -1.0, 1.0}}, {"c", -1.0}}},
                               {"angle", "const:1"}}},
                  {"grid", {{"nu", 11}, {"nv", 11}}}};
  const auto path = scratch("inline.json");
  std::ofstream(path) << j.dump();
  const CliRun r = run_cli({"verify", "--config", path.string()});
  EXPECT_EQ(r.code, kPass) << r.err << r.out;
}

TEST(Cli, ReportsAreDeterministic) {
  const std::vector<std::string> args{"verify", "--surface", "saearp", "--grid", "31x31"};
  EXPECT_EQ(run_cli(args).out, run_cli(args).out);
}

TEST(Cli, AngleParsing) {
  EXPECT_DOUBLE_EQ(parse_angle("pi"), std::numbers::pi);
  EXPECT_DOUBLE_EQ(parse_angle("pi/4"), std::numbers::pi / 4);
  EXPECT_DOUBLE_EQ(parse_angle("3pi/4"), 3 * std::numbers::pi / 4);
  EXPECT_DOUBLE_EQ(parse_angle("-0.5"), -0.5);
  EXPECT_THROW(parse_angle("tau"), ConfigError);
  const auto r = parse_angle_range("0:pi:9");
  ASSERT_EQ(r.size(), 9u);
  EXPECT_EQ(r.front(), 0.0);
  EXPECT_DOUBLE_EQ(r.back(), std::numbers::pi);
  EXPECT_DOUBLE_EQ(r[2], std::numbers::pi / 4);
  EXPECT_THROW(parse_angle_range("0:pi"), ConfigError);
  EXPECT_THROW(parse_angle_range("0:1:0"), ConfigError);
}
