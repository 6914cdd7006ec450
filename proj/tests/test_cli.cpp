#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

struct CliResult {
  int code = -1;
  std::string out;
};

CliResult run(const std::string& args) {
  std::string cmd = std::string(TROPJAC_CLI) + " " + args + " 2>/dev/null";
  CliResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& name) { return std::string(TROPJAC_TEST_DATA) + "/" + name; }

fs::path scratch(const std::string& name) {
  fs::path p = fs::temp_directory_path() / ("tropjac_cli_" + name);
  fs::remove_all(p);
  return p;
}

}  // namespace

TEST(Cli, AnalyzeK4) {
  CliResult r = run("analyze --input " + data("k4_unit.json"));
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["genus"], 3);
  EXPECT_EQ(j["type"], "K4");
  EXPECT_EQ(j["jacobian"]["Q"][0][0], "3");
  EXPECT_EQ(j["jacobian"]["periods"]["normal_form"], "4");
  EXPECT_TRUE(j["jacobian"]["dicing"]["passed"]);
}

TEST(Cli, AnalyzeTreeHasNoJacobian) {
  CliResult r = run("analyze --input " + data("tree.json"));
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["genus"], 0);
  EXPECT_FALSE(j.contains("jacobian"));
}

TEST(Cli, MalformedInput) {
  fs::path bad = scratch("bad.json");
  std::ofstream(bad) << "{\"vertices\": [";
  EXPECT_EQ(run("analyze --input " + bad.string()).code, 2);
  EXPECT_EQ(run("analyze --input /nonexistent/curve.json").code, 2);
  EXPECT_EQ(run("analyze").code, 2);
}

TEST(Cli, CeresaK4) {
  CliResult r = run("ceresa --input " + data("k4_unit.json") + " --mode both");
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["invariant"], "1");
  EXPECT_EQ(j["lattice"], "4");
  EXPECT_EQ(j["verdict"], "certified-inequivalent");
  EXPECT_EQ(j["symbolic"]["invariant"], "a*d");
  EXPECT_EQ(j["symbolic"]["member"], false);
  EXPECT_EQ(j["k_range"], nlohmann::json::array({1, 1}));
}

TEST(Cli, CeresaSymbolicMode) {
  CliResult r = run("ceresa --input " + data("k4_symbolic.json") + " --mode symbolic");
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["symbolic"]["member"], false);
  EXPECT_EQ(run("ceresa --input " + data("k4_unit.json") + " --mode symbolic").code, 2);
  EXPECT_EQ(run("ceresa --input " + data("k4_symbolic.json") + " --mode numeric").code, 2);
}

TEST(Cli, CeresaLowGenusIsUnsupported) {
  EXPECT_EQ(run("ceresa --input " + data("theta_genus2.json")).code, 3);
}

TEST(Cli, SeededRerunsAreIdentical) {
  CliResult a = run("ceresa --input " + data("k4_unit.json") + " --seed 17");
  CliResult b = run("ceresa --input " + data("k4_unit.json") + " --seed 17");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(nlohmann::json::parse(a.out)["invariant"], "1");
}

TEST(Cli, ExportK4) {
  fs::path dir = scratch("export_k4");
  ASSERT_EQ(run("export --input " + data("k4_unit.json") + " --output " + dir.string()).code, 0);
  nlohmann::json w1 = nlohmann::json::parse(std::ifstream(dir / "w1.json"));
  nlohmann::json z = nlohmann::json::parse(std::ifstream(dir / "zonotope.json"));
  EXPECT_EQ(w1["cells"].size(), 6u);
  EXPECT_EQ(z["vertices"].size(), 24u);
  EXPECT_EQ(z["facets"].size(), 14u);
  EXPECT_TRUE(fs::exists(dir / "chain.json"));
  EXPECT_TRUE(fs::exists(dir / "w1_neg.json"));
}

TEST(Cli, ExportLoopAndDefaultDirectory) {
  fs::path dir = scratch("export_loop");
  fs::create_directories(dir);
  std::string cmd = "cd " + dir.string() + " && " + std::string(TROPJAC_CLI) + " export --input " + data("loop.json") + " >/dev/null";
  ASSERT_EQ(std::system(cmd.c_str()), 0);
  nlohmann::json w1 = nlohmann::json::parse(std::ifstream(dir / "w1.json"));
  EXPECT_EQ(w1["cells"].size(), 1u);
}
