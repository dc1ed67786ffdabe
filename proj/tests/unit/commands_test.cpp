#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "treejac/commands.hpp"
#include "treejac/error.hpp"

namespace {

using namespace treejac;
using namespace treejac::cli;
using nlohmann::json;

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(TREEJAC_TEST_DATA) + "/" + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parsed(const CommandOutput& out) {
  EXPECT_EQ(out.exit_code, 0) << out.err;
  return json::parse(out.out);
}

TEST(CmdValidate, OkAndCycle) {
  auto doc = parsed(cmd_validate(slurp("fix_a.json"), {}));
  EXPECT_EQ(doc["components"], 2);
  EXPECT_EQ(doc["genus"], 0);

  const auto bad = cmd_validate(slurp("triangle.json"), {});
  EXPECT_EQ(bad.exit_code, 1);
  EXPECT_NE(bad.err.find("CycleDetected"), std::string::npos);
  EXPECT_TRUE(bad.out.empty());

  CommonOptions dot;
  dot.dot = true;
  doc = parsed(cmd_validate(slurp("fix_c.json"), dot));
  EXPECT_NE(doc["dot"].get<std::string>().find("\"C3\" -- \"C4\""), std::string::npos);
}

TEST(CmdOrder, GivenAndRejected) {
  CommonOptions given;
  given.ordering = std::vector<std::string>{"C2", "C1", "C4", "C3"};
  auto doc = parsed(cmd_order(slurp("fix_c.json"), given));
  EXPECT_EQ(doc["source"], "given");
  EXPECT_EQ(doc["ordering"]["attachments"][2]["subcurve"], (json{"C4"}));
  EXPECT_EQ(doc["ordering"]["attachments"][2]["node"], "P3");

  given.ordering = std::vector<std::string>{"C3", "C1", "C2", "C4"};
  const auto bad = cmd_order(slurp("fix_c.json"), given);
  EXPECT_EQ(bad.exit_code, 1);
  EXPECT_NE(bad.err.find("NotAdmissible"), std::string::npos);
}

TEST(CmdAnalyze, Examples) {
  auto doc = parsed(cmd_analyze(slurp("fix_a.json"), 0, {}));
  EXPECT_EQ(doc["theorem"]["part"], "a");
  EXPECT_EQ(doc["theorem"]["stable_multidegree"], (json{{"C1", 0}, {"C2", 0}}));

  doc = parsed(cmd_analyze(slurp("fix_c.json"), 2, {}));
  EXPECT_EQ(doc["theorem"]["part"], "b");
  EXPECT_EQ(doc["theorem"]["graded"]["pieces"], (json{{"C1", 0}, {"C2", 0}, {"C3", 1}, {"C4", 0}}));
  EXPECT_NE(doc["theorem"]["narrative"].get<std::string>().find("P3"), std::string::npos);
  EXPECT_EQ(doc["ordering"]["attachments"][2]["k"], "2");
  EXPECT_EQ(doc["ordering"]["attachments"][0]["k"], "1/2");

  doc = parsed(cmd_analyze(slurp("fix_d.json"), 2, {}));
  EXPECT_EQ(doc["theorem"]["graded"]["pieces"], (json{{"C1", 0}, {"C2", 1}}));
}

TEST(CmdAnalyze, ByteDeterministic) {
  for (auto* name : {"fix_a.json", "fix_c.json", "fix_c_sigma.json", "fix_d.json"})
    for (std::int64_t d = -3; d <= 5; ++d) {
      const auto a = cmd_analyze(slurp(name), d, {});
      const auto b = cmd_analyze(slurp(name), d, {});
      EXPECT_EQ(a.out, b.out);
    }
}

TEST(CmdCheck, Examples) {
  CheckOptions opts;
  opts.degrees = {{"C1", 0}, {"C2", 0}};
  EXPECT_EQ(parsed(cmd_check(slurp("fix_a.json"), 0, opts, {}))["verdict"]["status"], "Stable");

  opts.degrees = {{"C1", 1}, {"C2", -1}};
  auto doc = parsed(cmd_check(slurp("fix_a.json"), 0, opts, {}));
  EXPECT_EQ(doc["verdict"]["status"], "Unstable");
  EXPECT_EQ(doc["verdict"]["witness"], (json{"C2"}));

  opts.degrees = {{"C1", 0}, {"C2", 0}};
  opts.non_locally_free = {"P1"};
  opts.verbose = true;
  doc = parsed(cmd_check(slurp("fix_a.json"), 1, opts, {}));
  EXPECT_EQ(doc["verdict"]["status"], "StrictlySemistable");
  EXPECT_TRUE(doc.contains("bounds"));

  opts.non_locally_free.clear();
  const auto bad = cmd_check(slurp("fix_a.json"), 1, opts, {});
  EXPECT_EQ(bad.exit_code, 2);
  EXPECT_NE(bad.err.find("expected 1"), std::string::npos);

  opts.degrees = {{"C1", 0}};
  EXPECT_EQ(cmd_check(slurp("fix_a.json"), 0, opts, {}).exit_code, 1);
}

TEST(CmdEnumerate, Examples) {
  EnumerateOptions stable;
  EXPECT_EQ(parsed(cmd_enumerate(slurp("fix_a.json"), 1, stable, {}))["count"], 0);
  EnumerateOptions semi{ProfileKind::Semistable, 1, 8};
  auto doc = parsed(cmd_enumerate(slurp("fix_a.json"), 1, semi, {}));
  EXPECT_EQ(doc["count"], 3);
  EXPECT_EQ(doc["profiles"][2]["non_locally_free"], (json{"P1"}));
  EXPECT_EQ(parsed(cmd_enumerate(slurp("fix_c.json"), 2, stable, {}))["count"], 0);
  EXPECT_EQ(parsed(cmd_enumerate(slurp("fix_c.json"), 0, stable, {}))["count"], 1);

  EnumerateOptions capped{ProfileKind::Stable, 1, 1};
  EXPECT_EQ(cmd_enumerate(slurp("fix_a.json"), 0, capped, {}).exit_code, 3);
}

TEST(CmdChambers, CsvAndJson) {
  ChambersOptions opts;
  opts.d_range = {0, 3};
  opts.csv = true;
  const auto csv = cmd_chambers(slurp("fix_a.json"), opts, {});
  ASSERT_EQ(csv.exit_code, 0);
  EXPECT_EQ(csv.out,
            "h_C1,h_C2,d,t,b,chamber,d_C1,d_C2\n"
            "1,1,0,0,0,0,0,0\n"
            "1,1,1,0,1,WALL,0,0\n"
            "1,1,2,1,0,0,1,1\n"
            "1,1,3,1,1,WALL,1,1\n");

  opts.csv = false;
  opts.pol_ranges = {{"C1", {1, 2}}, {"C2", {1, 2}}};
  opts.d_range = {0, 0};
  auto doc = parsed(cmd_chambers(slurp("fix_a.json"), opts, {}));
  EXPECT_EQ(doc["count"], 4);
  for (const auto& row : doc["rows"]) EXPECT_FALSE(row["on_wall"].get<bool>());

  opts.max_points = 2;
  EXPECT_EQ(cmd_chambers(slurp("fix_a.json"), opts, {}).exit_code, 3);
}

TEST(CmdExamples, AllHold) {
  for (int which = 1; which <= 3; ++which) {
    auto doc = parsed(cmd_examples(which, {}));
    EXPECT_TRUE(doc["all_hold"].get<bool>()) << which;
  }
  CommonOptions table;
  table.format = OutputFormat::Table;
  const auto out = cmd_examples(3, table);
  EXPECT_NE(out.out.find("d_3 = d_3^X - 1 : 1 = 1  ✓"), std::string::npos);
  EXPECT_EQ(cmd_examples(4, {}).exit_code, 1);
}

TEST(ArgumentHelpers, Parse) {
  EXPECT_EQ(split_list("C1,C2"), (std::vector<std::string>{"C1", "C2"}));
  EXPECT_THROW((void)split_list("C1,,C2"), Error);
  EXPECT_EQ(parse_assignments("C1=1,C2=-1"), (std::map<std::string, std::int64_t>{{"C1", 1}, {"C2", -1}}));
  EXPECT_THROW((void)parse_assignments("C1=x"), Error);
  EXPECT_THROW((void)parse_assignments("C1=1,C1=2"), Error);
  EXPECT_EQ(parse_range("3").lo, 3);
  EXPECT_EQ(parse_range("-2..4").hi, 4);
  EXPECT_THROW((void)parse_range("4..2"), Error);
  EXPECT_EQ(parse_range_assignments("C1=1..2,C2=3").at("C2").lo, 3);
}

}  // namespace
