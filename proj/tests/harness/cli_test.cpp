#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <string>

namespace {

struct Result {
  int code;
  std::string out;
};

Result run(const std::string& args) {
  const std::string cmd = std::string(LPS_VERIFY_BIN) + " " + args + " 2>/dev/null";
  Result r{-1, {}};
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string temp_config(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << body;
  return path.string();
}

TEST(Cli, VerifyRegistryPasses) {
  const auto r = run("verify-theorems --format json");
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["pass"], true);
}

TEST(Cli, FailingCheckExitsOne) {
  // phi = identity violates phi^2 = -I + eta (x) xi.
  const auto path = temp_config("lps_cli_fail.json", R"({
  "schema": "lps-config/1",
  "name": "broken",
  "coords": ["x", "y", "z"],
  "phi": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]],
  "xi": ["0", "0", "-1"],
  "eta": ["0", "0", "1"],
  "connection": "zero"
})");
  const auto r = run("check-structure " + path);
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, InputErrorsExitTwo) {
  EXPECT_EQ(run("check-structure /nonexistent/config.json").code, 2);
  EXPECT_EQ(run("analyze 9.9").code, 2);
  EXPECT_EQ(run("check-structure 6.4 --points 0").code, 2);
  EXPECT_EQ(run("check-structure 6.4 --format xml").code, 2);
  EXPECT_EQ(run("no-such-verb").code, 2);
  EXPECT_EQ(run("").code, 2);
  const auto path = temp_config("lps_cli_bad.json", "{\"schema\": \"lps-config/1\", \"name\": 3}");
  EXPECT_EQ(run("check-structure " + path).code, 2);
}

TEST(Cli, ListAndExport) {
  const auto list = run("list-examples --format json");
  EXPECT_EQ(list.code, 0);
  EXPECT_NE(list.out.find("6.4/M1"), std::string::npos);
  const auto exported = run("export-example 6.4/M1");
  ASSERT_EQ(exported.code, 0);
  const auto path = temp_config("lps_cli_export.json", exported.out);
  EXPECT_EQ(run("analyze " + path + " --seed 3 --points 8").code, 0);
}

TEST(Cli, FlagsReachTheReport) {
  const auto r = run("check-structure 6.4 --seed 9 --points 7 --tol 1e-8 --format json");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["config"]["seed"], 9);
  EXPECT_EQ(j["config"]["points"], 7);
  EXPECT_DOUBLE_EQ(j["config"]["tol"].get<double>(), 1e-8);
}

}  // namespace
