#include <gtest/gtest.h>

#include "ffh/cli/commands.hpp"
#include "ffh/core/error.hpp"

using namespace ffh;
using namespace ffh::cli;

namespace {

Outcome run(const std::vector<std::string>& args) { return run_command(parse_command_line(args)); }

}  // namespace

TEST(Cli, RejectsUnknownVerbAndOption) {
  EXPECT_THROW(parse_command_line({"frobnicate"}), InputError);
  EXPECT_THROW(parse_command_line({"height", "--expr", "t", "--bogus", "1"}), InputError);
  EXPECT_THROW(parse_command_line({}), InputError);
}

TEST(Cli, HeightGolden) {
  auto out = run({"height", "--expr", "(t^2+1)/t"});
  EXPECT_EQ(out.exit_code, Ok);
  EXPECT_EQ(out.report["results"]["value"], "2/1");
  EXPECT_EQ(out.report["schema"], "1");
}

TEST(Cli, SyntaxErrorIsInputError) {
  auto out = run({"height", "--expr", "(t^2+1)//t"});
  EXPECT_EQ(out.exit_code, BadInput);
  EXPECT_FALSE(out.report["diagnostics"].empty());
}

TEST(Cli, JobsDoNotChangeOutput) {
  auto a = run({"places", "--poly", "Y^2 - X^3 - 1", "--center", "inf"});
  auto b = run({"places", "--poly", "Y^2 - X^3 - 1", "--center", "inf", "--jobs", "4"});
  EXPECT_EQ(render(a.report), render(b.report));
}

TEST(Cli, DivisorBracketsSurviveParsing) {
  auto cmd = parse_command_line(
      {"divisor", "--poly", "Y^2 - X", "--divisor", R"([{"center":"inf","branch":0,"multiplicity":2}])"});
  EXPECT_EQ(cmd.all("divisor").size(), 1u);
}

TEST(Cli, SelfTestAllPass) {
  auto r = self_test(1);
  EXPECT_EQ(r["failed"], 0);
  EXPECT_GE(r["total"].get<int>(), 40);
}
