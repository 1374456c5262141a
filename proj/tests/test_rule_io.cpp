#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "calab/error.hpp"
#include "calab/rule_io.hpp"
#include "generators.hpp"

using namespace calab;

namespace {

Errc code_of(std::string_view text) {
  try {
    parse_rule(text);
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::internal;
}

std::string message_of(std::string_view text) {
  try {
    parse_rule(text);
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST(ParseRule, WellFormed) {
  const auto file = parse_rule(R"({"q": 2, "memory": [0, 1, 2], "table": [0,1,1,0,1,0,0,1]})");
  EXPECT_EQ(file.rule, LocalRule::rule150w());
  EXPECT_FALSE(file.cyclic_group);

  const auto finite = parse_rule(R"({"q": 2, "memory": [0, 2], "table": [0,1,1,0], "group": {"cyclic": 6}})");
  EXPECT_EQ(finite.cyclic_group, 6);
}

TEST(ParseRule, SchemaErrors) {
  EXPECT_EQ(code_of(R"({"q": 2, "memory": [0, 1, 2], "table": [0,1,1,0,1,0,0]})"), Errc::schema_error);
  EXPECT_EQ(code_of(R"({"q": 2, "memory": [0, 0], "table": [0,1,1,0]})"), Errc::schema_error);
  EXPECT_EQ(code_of(R"({"q": 2, "memory": [0], "table": [0, 2]})"), Errc::schema_error);
  EXPECT_EQ(code_of(R"({"q": 0, "memory": [0], "table": []})"), Errc::schema_error);
  EXPECT_EQ(code_of(R"({"q": 2, "memory": [0], "table": [0, 1], "extra": 1})"), Errc::schema_error);
  EXPECT_EQ(code_of(R"({"q": 2, "memory": [0, 6], "table": [0,1,1,0], "group": {"cyclic": 6}})"),
            Errc::schema_error);
  EXPECT_EQ(code_of(R"({"memory": [0], "table": [0, 1]})"), Errc::schema_error);
}

TEST(ParseRule, DiagnosticsNameTheProblem) {
  EXPECT_NE(message_of(R"({"q": 2, "memory": [0, 1, 2], "table": [0,1,1,0,1,0,0]})").find("table"),
            std::string::npos);
  EXPECT_NE(message_of(R"({"q": 2, "memory": [0, 0], "table": [0,1,1,0]})").find("memory"), std::string::npos);
  const auto syntax = message_of("{\"q\": 2,\n \"memory\": [0,,1]}");
  EXPECT_NE(syntax.find("line 2"), std::string::npos) << syntax;
  EXPECT_EQ(code_of("{\"q\": 2,\n \"memory\": [0,,1]}"), Errc::parse_error);
}

TEST(SaveRule, RoundTrip) {
  gen::for_all(3, 200, [](gen::Gen& g, int i) {
    const auto q = static_cast<std::uint32_t>(g.integer(1, 4));
    // Finite-group memories are element ids, so they stay inside 0..8.
    const RuleFile file = i % 3 == 0 ? RuleFile{g.rule(q, 0, 8), 9} : RuleFile{g.rule(q, -4, 4), std::nullopt};
    EXPECT_EQ(parse_rule(save_rule(file)), file);
  });
}

TEST(SaveRule, FileRoundTrip) {
  const auto path = std::filesystem::temp_directory_path() / "calab_rule_io_test.json";
  const RuleFile file{LocalRule::shift(3, -2), std::nullopt};
  save_rule(path, file);
  EXPECT_EQ(load_rule(path), file);
  std::filesystem::remove(path);
}

TEST(BuiltinRule, Names) {
  EXPECT_EQ(*builtin_rule("identity"), LocalRule::identity());
  EXPECT_EQ(*builtin_rule("shift"), LocalRule::shift());
  EXPECT_EQ(*builtin_rule("rule150w"), LocalRule::rule150w());
  EXPECT_EQ(*builtin_rule("eca:150"), LocalRule::elementary(150));
  EXPECT_FALSE(builtin_rule("eca:256"));
  EXPECT_FALSE(builtin_rule("nonsense"));
}

TEST(BuiltinRule, Rule150wIsTheElementaryRule150) {
  EXPECT_EQ(LocalRule::rule150w(), LocalRule::elementary(150));
}
