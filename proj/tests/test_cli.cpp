#include <gtest/gtest.h>

#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "support.hpp"

namespace jonesmod::cli {
namespace {

using Json = nlohmann::ordered_json;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), {"--db", JONESMOD_TEST_DB});
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args, int expected_code = kExitOk) {
  args.insert(args.begin(), "--json");
  const auto r = run_cli(std::move(args));
  EXPECT_EQ(r.code, expected_code) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_TRUE(j.contains("command"));
  EXPECT_TRUE(j.contains("result"));
  EXPECT_TRUE(j.contains("pass"));
  EXPECT_TRUE(j["details"].is_array());
  return j;
}

TEST(Cli, ComputeBraid) {
  const auto j = run_json({"compute", "--braid", "[1,1,1]", "--mod", "2"});
  EXPECT_EQ(j["result"]["jones"], "-t^4+t^3+t");
  EXPECT_EQ(j["result"]["reduced"], "t^4+t^3+t");
  EXPECT_EQ(j["result"]["writhe"], 3);
  EXPECT_EQ(j["pass"], true);
}

TEST(Cli, ComputePdAndKnot) {
  const auto pd = run_json(
      {"compute", "--pd", "PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]"});
  EXPECT_EQ(pd["result"]["crossings"], 3);
  const auto k = run_json({"compute", "--knot", "12n237 # 12n237*", "--mod", "2"});
  EXPECT_EQ(k["result"]["reduced"], "1");
}

TEST(Cli, JonesRoundTripsThroughClassify) {
  const auto v = run_json({"compute", "--knot", "3_1 # 3_1"});
  const std::string poly = v["result"]["jones"];
  const auto c = run_json({"classify", "--poly", poly});
  EXPECT_EQ(c["result"]["family"], "I");
  EXPECT_EQ(c["result"]["n"], "-2");
  EXPECT_EQ(c["result"]["realizable_n"], true);
}

TEST(Cli, ConditionsFailureExitCode) {
  const auto j = run_json({"conditions", "--poly", "t^5"}, kExitFailed);
  EXPECT_EQ(j["pass"], false);
  EXPECT_EQ(j["result"]["c2"], false);
}

TEST(Cli, RefsAndRefined) {
  const auto j = run_json({"refs", "--mod", "2"});
  EXPECT_EQ(j["result"]["distinct_count"], 8);
  const auto r = run_json({"refs", "--mod", "5", "--refined"});
  EXPECT_EQ(r["result"]["entry_count"], 16);
}

TEST(Cli, EnumerateNegativeRange) {
  const auto j = run_json({"enumerate", "--mod", "2", "--range", "-4", "4"});
  EXPECT_EQ(j["result"]["count"], "16");
  EXPECT_EQ(j["result"]["members"].size(), 16u);
  const auto c = run_json(
      {"enumerate", "--mod", "2", "--range", "0", "8", "--count-only"});
  EXPECT_FALSE(c["result"].contains("members"));
}

TEST(Cli, DensityAndResidue) {
  const auto d = run_json({"density", "--mod", "3", "--range", "0", "7"});
  EXPECT_EQ(d["result"]["count_bound"], "12");
  EXPECT_EQ(d["result"]["density"], "4/2187");
  const auto r = run_json({"residue", "--poly", "t^12", "--mod", "2"});
  EXPECT_EQ(r["result"]["residue"], "1");
  EXPECT_EQ(r["result"]["admissible"], true);
  EXPECT_EQ(r["result"]["reference"]["family"], "I");
}

TEST(Cli, VerifyCommands) {
  EXPECT_EQ(run_json({"verify", "reference"})["pass"], true);
  EXPECT_EQ(run_json({"verify", "shift", "--k", "2", "--row", "-3"})["pass"],
            true);
  EXPECT_EQ(run_json({"db", "validate"})["pass"], true);
  // Row [0,8] does not reach 16 with the shipped data.
  const auto t = run_json({"verify", "table1"}, kExitFailed);
  EXPECT_EQ(t["result"]["rows"].size(), 8u);
}

TEST(Cli, TextOutputMatchesJsonContent) {
  const auto text = run_cli({"classify", "--poly", "-t^4+t^3+t"});
  EXPECT_EQ(text.code, kExitOk);
  EXPECT_NE(text.out.find("family:"), std::string::npos);
  EXPECT_NE(text.out.find("II"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_cli({}).code, kExitUsage);
  EXPECT_EQ(run_cli({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"refs", "--mod", "4"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"refs", "--mod", "3", "--refined"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"enumerate", "--mod", "2", "--range", "0", "5"}).code,
            kExitUsage);
  EXPECT_EQ(run_cli({"compute"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"classify", "--poly", "t^"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"compute", "--pd", "PD[X[1,2,3,4]]"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"classify", "--poly", "t^5"}).code, kExitUsage);
  const auto help = run_cli({"--help"});
  EXPECT_EQ(help.code, kExitOk);
  EXPECT_NE(help.out.find("enumerate"), std::string::npos);
}

TEST(Cli, MissingDatabaseIsDataError) {
  std::ostringstream out, err;
  EXPECT_EQ(run({"--db", "/nonexistent.csv", "verify", "reference"}, out, err),
            kExitUsage);
  EXPECT_FALSE(err.str().empty());
}

}  // namespace
}  // namespace jonesmod::cli
