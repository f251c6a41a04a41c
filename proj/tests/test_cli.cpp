#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include <gtest/gtest.h>

#include "shockcop/shockcop.hpp"

using namespace shockcop;
namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(SHOCKCOP_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, {}};
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string config(const std::string& name) { return std::string(SHOCKCOP_CONFIGS) + "/" + name; }

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("shockcop_cli_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST(Cli, SurfaceGridTwoHasFourCornerRows) {
  const auto r = run("surface --config " + config("example.json") + " --bound lower --grid 2");
  ASSERT_EQ(r.exit_code, 0);
  std::istringstream in(r.out);
  const auto t = read_csv(in);
  ASSERT_EQ(t.rows.size(), 4u);
  EXPECT_EQ(t.header.back(), "value");
  EXPECT_EQ(t.rows[0][2], 0.0);
  EXPECT_EQ(t.rows[1][2], 0.0);
  EXPECT_EQ(t.rows[2][2], 0.0);
  EXPECT_EQ(t.rows[3][2], 1.0);
}

TEST(Cli, SurfaceJsonOutput) {
  const auto dir = scratch("json");
  const auto out = (dir / "s.json").string();
  ASSERT_EQ(run("surface --config " + config("rmm3.json") + " --bound envelope_inf --grid 5 --out " + out).exit_code, 0);
  std::ifstream in(out);
  const auto j = json::parse(in);
  EXPECT_EQ(j["values"].size(), 125u);
  EXPECT_EQ(j["metadata"]["family"], "rmm");
  EXPECT_EQ(j["metadata"]["level"], "envelope_inf");
}

TEST(Cli, FamilyConflictIsConfigError) {
  EXPECT_EQ(run("surface --config " + config("rmm3.json") + " --family marshall --bound lower --grid 3").exit_code, 2);
}

TEST(Cli, PreciseBoundOnImpreciseModelIsConfigError) {
  EXPECT_EQ(run("surface --config " + config("maxmin2.json") + " --grid 3").exit_code, 2);
}

TEST(Cli, UnknownFlagValueIsRejected) {
  EXPECT_NE(run("surface --config " + config("example.json") + " --bound middle").exit_code, 0);
}

TEST(Cli, ExampleWritesSixFixtures) {
  const auto dir = scratch("example");
  const auto r = run("example --config " + config("example.json") + " --out " + dir.string());
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_TRUE(json::parse(r.out)["pass"].get<bool>());
  int files = 0;
  for (const auto& e : fs::directory_iterator(dir)) files += e.path().extension() == ".csv";
  EXPECT_EQ(files, 6);
}

TEST(Cli, ExampleWithCrossedRatesFails) {
  EXPECT_EQ(run("example --config " + config("example_bad_order.json")).exit_code, 2);
  EXPECT_EQ(run("example --lambda1 2 --lambda2 1").exit_code, 2);
}

TEST(Cli, FaultyPhiFailsAxiomsWithWitness) {
  const auto dir = scratch("faulty");
  const auto out = (dir / "report.json").string();
  EXPECT_EQ(run("verify --suite axioms --config " + config("faulty_phi.json") + " --out " + out).exit_code, 1);
  std::ifstream in(out);
  const auto j = json::parse(in);
  EXPECT_FALSE(j["pass"].get<bool>());
  bool found = false;
  for (const auto& c : j["checks"]) {
    if (c["check"] == "config_generator_conditions") {
      EXPECT_FALSE(c["pass"].get<bool>());
      ASSERT_FALSE(c["failures"].empty());
      const auto& f = c["failures"][0];
      EXPECT_TRUE(f.contains("model") && f.contains("point") && f.contains("expected") && f.contains("actual"));
      found = true;
    }
  }
  EXPECT_TRUE(found);
}

TEST(Cli, ShippedConfigsPassAxioms) {
  for (const char* name : {"rmm3.json", "maxmin2.json", "marshall_precise.json", "generators.json"}) {
    EXPECT_EQ(run(std::string("verify --suite axioms --config ") + config(name) + " --out /dev/null").exit_code, 0)
        << name;
  }
}

TEST(Cli, ValidateReportsViolations) {
  const auto bad = run("validate --config " + config("faulty_phi.json"));
  EXPECT_EQ(bad.exit_code, 1);
  EXPECT_FALSE(json::parse(bad.out)[0]["ok"].get<bool>());
  EXPECT_EQ(run("validate --config " + config("generators.json")).exit_code, 0);
}

TEST(Cli, MissingConfigFileIsRejected) {
  EXPECT_NE(run("surface --config /nonexistent/model.json").exit_code, 0);
}
