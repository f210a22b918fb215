// Runs the spinflow executable and checks exit codes and output shape.

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <nlohmann/json.hpp>

#include "spinflow/catalog.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(SPINFLOW_CLI_PATH) + " " + args + " 2>&1";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string write_temp(const std::string& name, const std::string& text) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST(Cli, CatalogListsManifolds) {
  const auto r = run("catalog");
  EXPECT_EQ(r.code, 0);
  for (const auto& name : spinflow::catalog_names()) EXPECT_NE(r.out.find(name), std::string::npos);
}

TEST(Cli, CatalogShowPrintsLoadableSpec) {
  const auto r = run("catalog --show nil3 --tau 2");
  ASSERT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["name"], "nil3");
  EXPECT_EQ(doc["expected"]["scal"], -8.0);
}

TEST(Cli, VerifyCatalogPasses) {
  for (const auto& name : spinflow::catalog_names()) {
    const auto r = run("verify --manifold " + name);
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("0 failed"), std::string::npos);
  }
}

TEST(Cli, VerifyJsonFormat) {
  const auto r = run("verify --manifold sol3 --format json");
  ASSERT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["summary"]["failed"], 0);
  EXPECT_FALSE(doc["checks"].empty());
}

TEST(Cli, CorruptedExpectationExitsOne) {
  auto doc = spinflow::catalog_template("nil3");
  doc["expected"]["lambda_sq"] = 0.25 + 1e-6;
  const auto path = write_temp("cli_corrupt.json", doc.dump());
  const auto r = run("verify --file " + path);
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, TighterToleranceStillPasses) {
  EXPECT_EQ(run("verify --manifold nil3 --tau 0.5 --tol 1e-11").code, 0);
}

TEST(Cli, InputErrorsExitTwo) {
  const auto parse = run("verify --file " + write_temp("cli_bad.json", "{ nope"));
  EXPECT_EQ(parse.code, 2);
  EXPECT_NE(parse.out.find("parse error"), std::string::npos);

  const auto schema = run("verify --file " + write_temp("cli_schema.json", R"({"name": "x", "dim": 3})"));
  EXPECT_EQ(schema.code, 2);
  EXPECT_NE(schema.out.find("schema error"), std::string::npos);

  const auto semantic = run("verify --file " + write_temp("cli_sem.json",
      R"({"name": "x", "dim": 3, "structure_constants": [{"i": 1, "j": 2, "k": 3, "value": 1},
          {"i": 1, "j": 3, "k": 1, "value": 1}], "spinor": {"components": [[1,0],[0,0]]}})"));
  EXPECT_EQ(semantic.code, 2);
  EXPECT_NE(semantic.out.find("semantic error"), std::string::npos);

  EXPECT_EQ(run("verify --file /nonexistent/x.json").code, 2);
  EXPECT_EQ(run("verify --manifold nope").code, 2);
  EXPECT_EQ(run("verify").code, 2);
  EXPECT_EQ(run("verify --manifold nil3 --format xml").code, 2);
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("rep --dim 0").code, 2);
}

TEST(Cli, RepPrintsGammaGrids) {
  const auto r = run("rep --dim 3");
  ASSERT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["spinor_dim"], 2);
  ASSERT_EQ(doc["gammas"].size(), 3u);
  // gamma_1 = -i sigma_1: entry (0, 1) is (0, -1).
  EXPECT_EQ(doc["gammas"][0][0][1][0], 0.0);
  EXPECT_EQ(doc["gammas"][0][0][1][1], -1.0);
}
