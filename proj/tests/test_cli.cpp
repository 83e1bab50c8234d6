#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli_app.hpp"
#include "report_schema.hpp"

using clext::cli::run_cli;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_config(const std::string& name, const json& j) {
  auto path = std::filesystem::temp_directory_path() / ("clext_test_" + name + ".json");
  std::ofstream(path) << j.dump();
  return path.string();
}

const json* find_check(const json& report, const std::string& name) {
  for (const auto& c : report["checks"])
    if (c["name"] == name) return &c;
  return nullptr;
}

}  // namespace

TEST(Cli, AlgebraInfo) {
  auto r = run({"algebra", "info", "--lambda", "3", "--alpha", "1,0"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(clext::oracle::report_schema_violation(r.out), "");
  auto j = json::parse(r.out);
  EXPECT_EQ(j["command"], "algebra info");
  EXPECT_EQ(j["data"]["gamma"], json({0.5, 1.0, 0.5}));
  EXPECT_EQ(j["data"]["fock_exists"], true);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({"algebra", "info", "--lambda", "3"}).code, 2);
  EXPECT_EQ(run({"algebra", "info", "--lambda", "1", "--alpha", "0"}).code, 2);
  EXPECT_EQ(run({"algebra", "info", "--lambda", "3", "--alpha", "1,0,0,0"}).code, 2);
  EXPECT_EQ(run({"algebra", "info", "--lambda", "3", "--alpha", "1,x"}).code, 2);
  EXPECT_EQ(run({"algebra", "info", "--lambda", "3", "--alpha", "1,0", "--bogus", "1"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"tables", "5"}).code, 2);
  EXPECT_EQ(run({"algebra", "info", "--lambda", "3", "--alpha", "1,0", "--format", "csv"}).code, 2);
  EXPECT_EQ(run({"algebra", "info", "--lambda", "3", "--alpha", "1,0", "--config", "/nonexistent.json"}).code, 2);
  // Library errors surface as usage errors.
  EXPECT_EQ(run({"fock", "verify", "--lambda", "2", "--alpha", "-3"}).code, 2);
  EXPECT_EQ(run({"susy", "ossqm", "--alpha", "0.5,0", "--mu", "0"}).code, 2);
  EXPECT_EQ(run({"fock", "verify", "--lambda", "3", "--alpha", "1,0", "--dim", "6"}).code, 2);
  auto r = run({"algebra", "info", "--lambda", "3"});
  EXPECT_NE(r.err.find("usage error"), std::string::npos);
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, Help) {
  auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("classify"), std::string::npos);
}

TEST(Cli, ClassifyAndTables) {
  auto r = run({"classify", "--lambda", "3", "--alpha", "0,-2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(clext::oracle::report_schema_violation(r.out), "");
  auto j = json::parse(r.out);
  EXPECT_EQ(j["data"]["classes"][0]["label"], "FD(d=2)");
  for (const char* lambda : {"2", "3", "4"}) {
    auto t = run({"tables", lambda});
    EXPECT_EQ(t.code, 0);
    EXPECT_EQ(clext::oracle::report_schema_violation(t.out), "");
  }
  EXPECT_EQ(run({"classify", "--lambda", "4", "--alpha", "3,0.5,-1"}).code, 0);
  EXPECT_EQ(run({"classify", "--lambda", "2", "--alpha", "1"}).code, 0);
}

TEST(Cli, SpectrumCsv) {
  auto r = run({"spectrum", "h0", "--lambda", "3", "--alpha", "1,0", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "n,k,mu,energy,degeneracy");
  std::vector<std::string> energies;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string c;
    while (std::getline(ss, c, ',')) cells.push_back(c);
    ASSERT_EQ(cells.size(), 5u);
    energies.push_back(cells[3]);
  }
  ASSERT_GE(energies.size(), 6u);
  EXPECT_EQ(std::vector<std::string>(energies.begin(), energies.begin() + 6),
            (std::vector<std::string>{"1", "2.5", "3", "4", "5.5", "6"}));
}

TEST(Cli, SpectraAcrossVariants) {
  auto o = run({"spectrum", "ossqm", "--alpha", "0,-1", "--mu", "0", "--format", "csv"});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_NE(o.out.find("0,0,0,1,3"), std::string::npos);
  auto p = run({"spectrum", "pssqm", "--p", "2", "--mu", "0", "--alpha", "1,0"});
  ASSERT_EQ(p.code, 0) << p.err;
  EXPECT_EQ(clext::oracle::report_schema_violation(p.out), "");
  auto ps = run({"spectrum", "pseudo", "--alpha", "0.5,0", "--family", "two", "--mu", "1", "--c", "1", "--r-mu", "2"});
  EXPECT_EQ(ps.code, 0) << ps.err;
}

TEST(Cli, VerifyCommandsPass) {
  const std::vector<std::vector<std::string>> cases = {
      {"fock", "verify", "--lambda", "3", "--alpha", "1,0", "--dim", "30"},
      {"susy", "pssqm", "--p", "4", "--mu", "2", "--alpha", "0.5,0.2,0.1,-0.3", "--dim", "50"},
      {"susy", "charges", "--p", "2", "--mu", "0", "--alpha", "0.5,0.2", "--dim", "30"},
      {"susy", "pseudo", "--alpha", "0.5,0", "--family", "one", "--mu", "0", "--c", "1", "--eta", "1"},
      {"susy", "ossqm", "--alpha", "0,-1", "--mu", "0", "--xi", "0.7", "--phi", "0.3"},
      {"deform", "verify", "--family", "a", "--q", "2", "--alpha-hat", "0.3"},
      {"deform", "verify", "--family", "c", "--lambda", "3", "--alpha", "0.2,0.1", "--q", "1.3"},
      {"deform", "verify", "--family", "b", "--lambda", "3", "--alpha", "0.2,0.1", "--q", "1.3", "--k", "0.5"},
      {"deform", "cv", "--q", "0.5", "--alpha-hat", "0.3", "--n0", "1"},
  };
  for (const auto& args : cases) {
    auto r = run(args);
    EXPECT_EQ(r.code, 0) << args[0] << " " << args[1] << ": " << r.err << r.out;
    EXPECT_EQ(clext::oracle::report_schema_violation(r.out), "") << args[0] << " " << args[1];
  }
}

TEST(Cli, FailingCheckExitsOne) {
  auto r = run({"fock", "verify", "--lambda", "3", "--alpha", "1,0", "--dim", "30", "--tol", "1e-30"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(clext::oracle::report_schema_violation(r.out), "");
  auto j = json::parse(r.out);
  bool any_fail = false;
  for (const auto& c : j["checks"]) any_fail = any_fail || !c["pass"].get<bool>();
  EXPECT_TRUE(any_fail);
  auto rej = run({"deform", "verify", "--family", "a", "--lambda", "2", "--alpha", "0.3", "--q", "2",
                  "--config", write_config("rejected", {{"deformation", {{"E", {{"kind", "power"}, {"b", 1}, {"base", -2}}}}}})});
  EXPECT_EQ(rej.code, 2);
}

TEST(Cli, FlagsOverrideConfig) {
  auto path = write_config("override", {{"lambda", 3}, {"alpha", {1.0, 0.0}}, {"dim", 30}, {"tol", 1e-30}});
  auto from_file = run({"fock", "verify", "--config", path});
  EXPECT_EQ(from_file.code, 1);
  auto j = json::parse(from_file.out);
  EXPECT_EQ(j["params"]["dim"], 30);
  auto overridden = run({"fock", "verify", "--config", path, "--tol", "1e-10", "--dim", "33"});
  EXPECT_EQ(overridden.code, 0) << overridden.err;
  auto k = json::parse(overridden.out);
  EXPECT_EQ(k["params"]["dim"], 33);
  EXPECT_EQ(k["params"]["alpha"], json({1.0, 0.0, -1.0}));

  auto bad = write_config("bad", json::array({1, 2}));
  EXPECT_EQ(run({"fock", "verify", "--config", bad}).code, 2);
}

TEST(Cli, EnvironmentToleranceOverridesDefaultOnly) {
  ::setenv("CLEXT_TOL", "1e-30", 1);
  auto strict = run({"fock", "verify", "--lambda", "3", "--alpha", "1,0", "--dim", "30"});
  auto flag = run({"fock", "verify", "--lambda", "3", "--alpha", "1,0", "--dim", "30", "--tol", "1e-10"});
  ::setenv("CLEXT_TOL", "abc", 1);
  auto garbage = run({"fock", "verify", "--lambda", "3", "--alpha", "1,0", "--dim", "30"});
  ::unsetenv("CLEXT_TOL");
  EXPECT_EQ(strict.code, 1);
  EXPECT_EQ(flag.code, 0);
  EXPECT_EQ(garbage.code, 2);
  auto j = json::parse(strict.out);
  EXPECT_EQ(j["params"]["tol"], 1e-30);
  const json* c = find_check(j, "a = (a+)^dagger");
  ASSERT_NE(c, nullptr);
  EXPECT_EQ((*c)["tol"], 1e-30);
}

TEST(Cli, TextAndJsonAgree) {
  auto j = run({"fock", "verify", "--lambda", "3", "--alpha", "1,0", "--dim", "30"});
  auto t = run({"fock", "verify", "--lambda", "3", "--alpha", "1,0", "--dim", "30", "--format", "text"});
  ASSERT_EQ(j.code, 0);
  ASSERT_EQ(t.code, 0);
  for (const auto& c : json::parse(j.out)["checks"])
    EXPECT_NE(t.out.find(c["name"].get<std::string>()), std::string::npos);
}

TEST(Cli, SchemaValidatorRejectsMalformedReports) {
  using clext::oracle::report_schema_violation;
  EXPECT_NE(report_schema_violation("[]"), "");
  EXPECT_NE(report_schema_violation(R"({"command":"x","params":{},"checks":[],"extra":1})"), "");
  EXPECT_NE(report_schema_violation(R"({"command":"x","params":{},"checks":[{"name":"a","residual":1,"tol":0.5,"pass":true}]})"), "");
  EXPECT_NE(report_schema_violation(R"({"command":"x","params":{}})"), "");
  EXPECT_EQ(report_schema_violation(R"({"command":"x","params":{},"checks":[{"name":"a","residual":0.1,"tol":0.5,"pass":true}]})"), "");
}
