#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "kmm/fixtures.hpp"
#include "kmm_cli/commands.hpp"

using namespace kmm;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& rel) { return std::string(KMM_DATA_DIR) + "/" + rel; }

std::filesystem::path temp_file(const std::string& name, const std::string& body) {
  const auto p = std::filesystem::temp_directory_path() / ("kmm_cli_test_" + name);
  std::ofstream(p) << body;
  return p;
}

}  // namespace

TEST(CliCheck, GhzLadder) {
  const auto r = run({"check", "--state", data("states/ghz4.json")});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["n"], 4);
  ASSERT_EQ(j["ladder"].size(), 2u);
  EXPECT_EQ(j["ladder"][0]["verdict"], true);
  EXPECT_EQ(j["ladder"][1]["verdict"], false);
  EXPECT_LT(j["purity"]["norm_residual"].get<double>(), 1e-12);
  EXPECT_FALSE(j.contains("timings_ms"));
}

TEST(CliCheck, SixQubitBellOfLogicalStates) {
  const auto r = run({"check", "--fixture", "m6_psi_minus"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  const auto j = json::parse(r.out);
  for (const auto& rung : j["ladder"]) EXPECT_EQ(rung["verdict"], true);
  EXPECT_EQ(j["ladder"].size(), 3u);
}

TEST(CliCheck, SymmetricInputGetsCensus) {
  const auto r = run({"check", "--fixture", "psi6", "--timings"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["census"]["zero_odd"], 64);
  EXPECT_TRUE(j.contains("timings_ms"));
}

TEST(CliCheck, CsvDump) {
  const auto r = run({"check", "--fixture", "ghz4", "--csv"});
  ASSERT_EQ(r.code, cli::kExitOk);
  std::istringstream in(r.out);
  std::string header, first;
  std::getline(in, header);
  std::getline(in, first);
  EXPECT_EQ(header, "index_string,lambda,weight,parity,value");
  EXPECT_EQ(first, "0000,\"[4,0,0,0]\",0,even,0.0625");
}

TEST(CliCheck, MalformedJsonIsAValidationError) {
  const auto p = temp_file("bad.json", "{\"n\": 2,\n");
  const auto r = run({"check", "--state", p.string()});
  EXPECT_EQ(r.code, cli::kExitValidation);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("line 2"), std::string::npos) << r.err;
}

TEST(CliCheck, BadInputs) {
  const auto unnormalized = temp_file("unnorm.json", R"({"n": 1, "amplitudes": [[1,0],[1,0]]})");
  EXPECT_EQ(run({"check", "--state", unnormalized.string()}).code, cli::kExitValidation);
  const auto wrong_len = temp_file("len.json", R"({"n": 2, "amplitudes": [[1,0],[0,0]]})");
  EXPECT_EQ(run({"check", "--state", wrong_len.string()}).code, cli::kExitValidation);
  EXPECT_EQ(run({"check", "--fixture", "nope"}).code, cli::kExitValidation);
  EXPECT_EQ(run({"check"}).code, cli::kExitValidation);
  EXPECT_EQ(run({"check", "--state", "/nonexistent.json"}).code, cli::kExitValidation);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kExitValidation);
}

TEST(CliCheck, DenseCapIsAResourceError) {
  const auto r = run({"check", "--fixture", "ghz20"});
  EXPECT_EQ(r.code, cli::kExitResource);
  EXPECT_TRUE(r.out.empty());
}

TEST(CliBalanced, ProductAndCode) {
  auto r = run({"balanced", "--group", data("groups/product00.txt")});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  auto j = json::parse(r.out);
  EXPECT_EQ(j["pure"], true);
  EXPECT_EQ(j["mm_level"], 0);

  r = run({"balanced", "--group", data("groups/five_qubit_code.txt")});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  j = json::parse(r.out);
  EXPECT_EQ(j["order"], 32);
  EXPECT_EQ(j["mm_level"], 2);
  EXPECT_EQ(j["min_nonidentity_weight"], 3);

  r = run({"balanced", "--group", data("groups/anticommuting.txt")});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  j = json::parse(r.out);
  EXPECT_EQ(j["pure"], false);
  EXPECT_EQ(j["flags"]["is_abelian"], false);
  EXPECT_FALSE(j["reasons"].empty());

  r = run({"balanced", "--fixture", "m6_phi_plus"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_EQ(json::parse(r.out)["mm_level"], 3);
}

TEST(CliBalanced, ParseErrorCarriesLine) {
  const auto p = temp_file("group.txt", "# comment\nXX\nXQ\n");
  const auto r = run({"balanced", "--group", p.string()});
  EXPECT_EQ(r.code, cli::kExitValidation);
  EXPECT_NE(r.err.find("line 3"), std::string::npos) << r.err;
}

TEST(CliSymcensus, ReferenceCounts) {
  auto j = json::parse(run({"symcensus", "--fixture", "psi4"}).out);
  EXPECT_EQ(j["zero_odd"], 18);
  EXPECT_EQ(j["total_odd"], 25);
  j = json::parse(run({"symcensus", "--fixture", "psi10"}).out);
  EXPECT_EQ(j["zero_odd"], 230);
  EXPECT_EQ(j["total_odd"], 230);
  j = json::parse(run({"symcensus", "--state", data("majorana/icosahedron.json")}).out);
  EXPECT_EQ(j["zero_odd"], 371);
}

TEST(CliSymcensus, RotationChangesTheRatio) {
  const auto plain = json::parse(run({"symcensus", "--fixture", "psi4"}).out);
  const auto r = run({"symcensus", "--fixture", "psi4", "--rotate", "0.3,0.2,0.1"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  const auto rotated = json::parse(r.out);
  EXPECT_NE(plain["ratio"], rotated["ratio"]);
  EXPECT_TRUE(rotated.contains("rotation"));
  EXPECT_EQ(run({"symcensus", "--fixture", "psi4", "--rotate", "0.3,0.2"}).code, cli::kExitValidation);
}

TEST(CliSymcensus, NonSymmetricAndUnavailable) {
  EXPECT_EQ(run({"symcensus", "--fixture", "w3"}).code, cli::kExitValidation);
  EXPECT_EQ(run({"symcensus", "--fixture", "psi20"}).code, cli::kExitValidation);
}

TEST(CliStructure, HeaderAndRows) {
  const auto r = run({"structure", "--fixture", "psi4"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "lambda,multiplicity,parity,weight,value");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 35);
}

TEST(CliBounds, TableAndOutFile) {
  const auto out = std::filesystem::temp_directory_path() / "kmm_cli_test_chart.json";
  std::filesystem::remove(out);
  const auto r = run({"bounds", "--n-max", "20", "--table", data("tables/code_table.csv"), "--out", out.string()});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  std::ifstream in(out);
  const auto j = json::parse(in);
  EXPECT_NEAR(j["x0"].get<double>(), 0.18929, 1e-5);
  bool has_lower = false;
  for (const auto& s : j["series"]) has_lower |= s["name"] == "constructive_lower";
  EXPECT_TRUE(has_lower);
}

TEST(CliBounds, InvalidInput) {
  const auto bad = temp_file("bad.csv", "n,k_lower,k_upper\n5,x,1\n");
  const auto r = run({"bounds", "--n-max", "5", "--table", bad.string()});
  EXPECT_EQ(r.code, cli::kExitValidation);
  EXPECT_NE(r.err.find("line 2"), std::string::npos);
  EXPECT_EQ(run({"bounds", "--n-max", "0"}).code, cli::kExitValidation);
  EXPECT_EQ(run({"bounds", "--n-max", "5000"}).code, cli::kExitValidation);
  EXPECT_EQ(run({"bounds"}).code, cli::kExitValidation);
}

TEST(Cli, DeterministicOutput) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"check", "--fixture", "zero_L"}, {"symcensus", "--fixture", "psi9"},
        {"structure", "--fixture", "psi7"}, {"bounds", "--n-max", "50"}}) {
    EXPECT_EQ(run(args).out, run(args).out);
  }
}

TEST(Cli, EveryFixtureLoads) {
  for (const auto& name : fixture_names()) {
    const auto r = run({"check", "--fixture", name});
    EXPECT_EQ(r.code, cli::kExitOk) << name << ": " << r.err;
  }
  for (const char* name : {"psi4", "psi5", "psi6", "psi7", "psi8", "psi9", "psi10", "psi12", "tetrahedron", "octahedron",
                           "cube", "icosahedron", "dodecahedron", "ghz25"}) {
    const auto r = run({"symcensus", "--fixture", name});
    EXPECT_EQ(r.code, cli::kExitOk) << name << ": " << r.err;
  }
}

TEST(Cli, SymmetricFileFormats) {
  for (const char* file : {"states/psi5_dicke.json", "states/dicke_s1_n3_roots.json", "majorana/tetrahedron.json",
                           "majorana/dodecahedron.json"}) {
    const auto r = run({"symcensus", "--state", data(file)});
    EXPECT_EQ(r.code, cli::kExitOk) << file << ": " << r.err;
  }
  const auto j = json::parse(run({"symcensus", "--state", data("states/psi5_dicke.json")}).out);
  EXPECT_EQ(j["zero_odd"], 36);
}
