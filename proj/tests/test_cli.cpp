#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "../tools/cli.hpp"

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = calab::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string rule_path(const std::string& name) { return std::string(CALAB_SOURCE_DIR) + "/rules/" + name; }

}  // namespace

TEST(Cli, AnalyzeRule150w) {
  const auto r = run({"analyze", "--rule", rule_path("rule150w.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = json::parse(r.out);
  EXPECT_FALSE(doc["injective"].get<bool>());
  EXPECT_TRUE(doc["surjective"].get<bool>());
  EXPECT_TRUE(doc["pre_injective"].get<bool>());
  EXPECT_FALSE(doc["post_surjective"].get<bool>());
  EXPECT_FALSE(doc["witnesses"]["non_injective"].is_null());
}

TEST(Cli, AnalyzeBuiltinAndCyclic) {
  const auto shift = run({"analyze", "--rule", "shift"});
  ASSERT_EQ(shift.code, 0) << shift.err;
  EXPECT_TRUE(json::parse(shift.out)["invertible"].get<bool>());

  const auto cyclic = run({"analyze", "--rule", rule_path("rule150w_cyclic5.json")});
  ASSERT_EQ(cyclic.code, 0) << cyclic.err;
  EXPECT_TRUE(json::parse(cyclic.out)["bijective"].get<bool>());
}

TEST(Cli, ReproduceExample7) {
  const auto r = run({"reproduce-example7", "--max-n", "32"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["verdict"], "pass");
}

TEST(Cli, VerifyGoe) {
  const auto r = run({"verify", "--suite", "goe", "--seed", "7"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["entries"].size(), 256u);
}

TEST(Cli, QuotientScanFormats) {
  const auto j = run({"quotient-scan", "--rule", "rule150w", "--max-n", "5"});
  ASSERT_EQ(j.code, 0) << j.err;
  EXPECT_EQ(json::parse(j.out)["entries"].size(), 5u);

  const auto csv = run({"quotient-scan", "--rule", "rule150w", "--moduli", "4,7,10", "--format", "csv"});
  ASSERT_EQ(csv.code, 0) << csv.err;
  EXPECT_EQ(std::count(csv.out.begin(), csv.out.end(), '\n'), 4);
  EXPECT_NE(csv.out.find("modulus"), std::string::npos);

  const auto table = run({"quotient-scan", "--rule", "shift", "--moduli", "2,3", "--format", "table"});
  ASSERT_EQ(table.code, 0) << table.err;
  EXPECT_NE(table.out.find("bijective"), std::string::npos);
}

TEST(Cli, QuotientScanLemmas) {
  const auto pre = run({"quotient-scan", "--rule", "rule150w", "--max-n", "6", "--lemma", "preinjective-limit"});
  EXPECT_EQ(pre.code, 0) << pre.err;
  const auto open = run({"quotient-scan", "--rule", "rule150w", "--max-n", "32", "--lemma", "openness"});
  ASSERT_EQ(open.code, 0) << open.err;
  EXPECT_TRUE(json::parse(open.out)["params"]["converse_failure"].get<bool>());
}

TEST(Cli, Transports) {
  const auto q = run({"transport", "quotient", "--rule", "rule150w", "--modulus", "2"});
  ASSERT_EQ(q.code, 0) << q.err;
  EXPECT_EQ(json::parse(q.out)["group"]["cyclic"], 2);

  const auto b = run({"transport", "block", "--rule", "shift", "--block", "2"});
  ASSERT_EQ(b.code, 0) << b.err;
  EXPECT_EQ(json::parse(b.out)["q"], 4);

  const auto inv = run({"transport", "inverse", "--rule", "shift"});
  ASSERT_EQ(inv.code, 0) << inv.err;
  EXPECT_EQ(json::parse(inv.out)["memory"], json::array({-1}));

  EXPECT_EQ(run({"transport", "inverse", "--rule", "rule150w"}).code, 1);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"analyze"}).code, 2);
  EXPECT_EQ(run({"analyze", "--rule", "shift", "--bogus"}).code, 2);
  EXPECT_EQ(run({"analyze", "--rule", "shift", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"verify", "--suite", "nope"}).code, 2);
  EXPECT_EQ(run({"quotient-scan", "--rule", "shift"}).code, 2);
  EXPECT_EQ(run({"analyze", "--rule", rule_path("missing.json")}).code, 2);

  const auto both = run({"quotient-scan", "--rule", "shift", "--moduli", "2,3", "--max-n", "3"});
  EXPECT_EQ(both.code, 2);
  EXPECT_NE(both.err.find("excludes"), std::string::npos) << both.err;
}

TEST(Cli, SchemaErrorIsUsage) {
  const auto path = std::filesystem::temp_directory_path() / "calab_bad_rule.json";
  std::ofstream(path) << R"({"q": 2, "memory": [0, 1, 2], "table": [0, 1, 1, 0, 1, 0, 0]})";
  const auto r = run({"analyze", "--rule", path.string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("table"), std::string::npos) << r.err;
  std::filesystem::remove(path);
}

TEST(Cli, Refusals) {
  EXPECT_EQ(run({"analyze", "--rule", rule_path("rule150w_cyclic5.json"), "--budget", "8"}).code, 3);
  EXPECT_EQ(run({"transport", "inverse", "--rule", "shift", "--max-radius", "0"}).code, 3);
}

TEST(Cli, HelpExitsZero) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("quotient-scan"), std::string::npos);
}

TEST(Cli, WritesOutFile) {
  const auto path = std::filesystem::temp_directory_path() / "calab_cli_out.json";
  const auto r = run({"analyze", "--rule", "identity", "--out", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  EXPECT_TRUE(json::parse(in)["injective"].get<bool>());
  std::filesystem::remove(path);
}

TEST(Cli, DeterministicOutput) {
  const std::vector<std::string> args{"verify", "--suite", "finite-collapse", "--seed", "3"};
  EXPECT_EQ(run(args).out, run(args).out);
}
