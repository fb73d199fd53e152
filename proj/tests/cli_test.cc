// Copyright 2026 The crflow Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "crflow/cli.h"

#include <gmock/gmock.h>
#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "crflow/analyze.h"
#include "crflow/compose.h"
#include "crflow/json_io.h"
#include "support/fixtures.h"
#include "support/generators.h"

namespace crflow {
namespace {

namespace fs = std::filesystem;
using ::testing::HasSubstr;
using ::testing::IsEmpty;
using ::testing::SizeIs;

std::string fixture(const std::string& name) {
  return std::string(CRFLOW_FIXTURES) + "/" + name;
}

struct Run {
  int code;
  std::string out;
  std::string err;

  Json json() const { return parse_json(out); }
};

Run crflow(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = cli::run(args, out, err);
  return Run{code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("crflow_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string temp(const std::string& name) const {
    return (dir_ / name).string();
  }

  fs::path dir_;
};

TEST_F(CliTest, TranslateSampleAcl) {
  auto r = crflow({"translate", fixture("sample_acl.json")});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  auto cr = parse_cr(r.out);
  EXPECT_THAT(cr.interfaces(), SizeIs(12));
  EXPECT_THAT(cr.flows(), SizeIs(9));
  EXPECT_EQ(r.out, crflow({"translate", fixture("sample_acl.json")}).out);
  EXPECT_TRUE(r.err.empty());

  auto caps = crflow({"translate", fixture("sample_capabilities.json")});
  EXPECT_EQ(caps.out, r.out);
}

TEST_F(CliTest, TranslateLbacAndRbac) {
  auto lbac = crflow({"translate", fixture("lbac_low_high.json")});
  ASSERT_EQ(lbac.code, cli::kOk);
  EXPECT_THAT(parse_cr(lbac.out).flows(), SizeIs(4));

  auto literal = crflow({"translate", fixture("rbac_two_roles.json")});
  EXPECT_THAT(parse_cr(literal.out).flows(), IsEmpty());
  auto cross = crflow({"translate", fixture("rbac_two_roles.json"),
                       "--rbac-semantics", "cross-object"});
  EXPECT_THAT(parse_cr(cross.out).flows(), SizeIs(1));
  EXPECT_EQ(crflow({"translate", fixture("rbac_two_roles.json"),
                    "--rbac-semantics", "osborn"})
                .code,
            cli::kUsage);
}

TEST_F(CliTest, TranslateWritesOutputFile) {
  auto path = temp("out.json");
  auto r = crflow({"translate", fixture("sample_acl.json"), "-o", path});
  ASSERT_EQ(r.code, cli::kOk);
  EXPECT_TRUE(r.out.empty());
  EXPECT_THAT(parse_cr(read_file(path)).flows(), SizeIs(9));
}

TEST_F(CliTest, TranslateErrors) {
  auto malformed = crflow({"translate", fixture("malformed.json")});
  EXPECT_EQ(malformed.code, cli::kParse);
  EXPECT_THAT(malformed.err, HasSubstr("malformed JSON"));
  EXPECT_TRUE(malformed.out.empty());

  auto unknown = crflow({"translate", fixture("acl_unknown_field.json")});
  EXPECT_EQ(unknown.code, cli::kParse);
  EXPECT_THAT(unknown.err, HasSubstr("owner"));

  auto cycle = crflow({"translate", fixture("rbac_cycle.json")});
  EXPECT_EQ(cycle.code, cli::kValidation);
  EXPECT_THAT(cycle.err, HasSubstr("hierarchy"));

  EXPECT_EQ(crflow({"translate", fixture("no_such_file.json")}).code,
            cli::kParse);
}

TEST_F(CliTest, ComposeMerge) {
  auto r =
      crflow({"compose", "merge", fixture("cr1.json"), fixture("cr2.json")});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_THAT(parse_cr(r.out).flows(), SizeIs(4));
  auto swapped =
      crflow({"compose", "merge", fixture("cr2.json"), fixture("cr1.json")});
  EXPECT_EQ(swapped.out, r.out);
}

TEST_F(CliTest, ComposeAppendIsOrderSensitive) {
  auto ab = crflow({"compose", "append", fixture("opposing_a.json"),
                    fixture("opposing_b.json")});
  auto ba = crflow({"compose", "append", fixture("opposing_b.json"),
                    fixture("opposing_a.json")});
  ASSERT_EQ(ab.code, cli::kOk);
  ASSERT_EQ(ba.code, cli::kOk);
  EXPECT_NE(ab.out, ba.out);
  EXPECT_EQ(parse_cr(ab.out), testing::opposing_first());
  EXPECT_EQ(parse_cr(ba.out), testing::opposing_second());
}

TEST_F(CliTest, ComposeAppendStrict) {
  auto r = crflow(
      {"compose", "append-strict", fixture("cr1.json"), fixture("cr2.json")});
  ASSERT_EQ(r.code, cli::kOk);
  EXPECT_EQ(parse_cr(r.out), append_strict(testing::conflict_example_first(),
                                           testing::conflict_example_second()));
}

TEST_F(CliTest, ComposeRuleMerge) {
  auto cr_out = temp("result.json");
  auto r = crflow({"compose", "rule", fixture("complementary_a.json"),
                   fixture("complementary_b.json"), "--rule",
                   fixture("rule_complementary.json"), "--cr-out", cr_out});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  auto report = r.json();
  EXPECT_EQ(report["command"], "compose");
  EXPECT_THAT(report["inputs"], SizeIs(3));
  const auto& decision = report["outcome"]["decisions"][0];
  EXPECT_EQ(decision["action"], "merge");
  EXPECT_EQ(decision["condition_held"], true);
  EXPECT_EQ(decision["evidence"],
            to_json(conflicts(testing::complementary_first(),
                              testing::complementary_second())));
  EXPECT_EQ(
      parse_cr(read_file(cr_out)),
      merge(testing::complementary_first(), testing::complementary_second()));
}

TEST_F(CliTest, ComposeRuleAppend) {
  auto r = crflow({"compose", "rule", fixture("opposing_a.json"),
                   fixture("opposing_b.json"), "--rule",
                   fixture("rule_complementary.json")});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  auto outcome = r.json()["outcome"];
  EXPECT_EQ(outcome["decisions"][0]["action"], "append");
  EXPECT_EQ(cr_from_json(outcome["result"]), testing::opposing_first());
}

TEST_F(CliTest, ComposeRuleReject) {
  auto report_path = temp("report.json");
  auto r = crflow({"compose", "rule", fixture("opposing_a.json"),
                   fixture("opposing_b.json"), "--rule",
                   fixture("rule_reject.json"), "-o", report_path});
  EXPECT_EQ(r.code, cli::kRejected);
  auto report = parse_json(read_file(report_path));
  EXPECT_EQ(report["outcome"]["decisions"][0]["action"], "reject");
  EXPECT_TRUE(report["outcome"]["result"].is_null());
}

TEST_F(CliTest, ComposeRuleWarnsOnDisjointOperands) {
  auto r = crflow({"compose", "rule", fixture("disjoint_pq.json"),
                   fixture("disjoint_rs.json"), "--rule",
                   fixture("rule_reject.json")});
  ASSERT_EQ(r.code, cli::kOk);
  EXPECT_THAT(r.err, HasSubstr("share no interfaces"));
  EXPECT_THAT(r.json()["diagnostics"], SizeIs(1));
  EXPECT_EQ(r.json()["outcome"]["decisions"][0]["action"], "merge");
}

TEST_F(CliTest, ComposeUsageErrors) {
  EXPECT_EQ(crflow({"compose", "merge", fixture("cr1.json")}).code,
            cli::kUsage);
  EXPECT_EQ(
      crflow({"compose", "rule", fixture("cr1.json"), fixture("cr2.json")})
          .code,
      cli::kUsage);
  EXPECT_EQ(crflow({"compose", "merge", fixture("cr1.json"),
                    fixture("cr2.json"), "--rule", fixture("rule_reject.json")})
                .code,
            cli::kUsage);
  EXPECT_EQ(
      crflow({"compose", "union", fixture("cr1.json"), fixture("cr2.json")})
          .code,
      cli::kUsage);
  EXPECT_EQ(crflow({"compose", "merge", fixture("cr1.json"),
                    fixture("dangling.json")})
                .code,
            cli::kValidation);
  EXPECT_EQ(crflow({"compose", "rule", fixture("cr1.json"), fixture("cr2.json"),
                    "--rule", fixture("rule_same_actions.json")})
                .code,
            cli::kValidation);
}

TEST_F(CliTest, AnalyzeWorkedExample) {
  auto r = crflow({"analyze", fixture("cr1.json"), fixture("cr2.json")});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  auto outcome = r.json()["outcome"];
  EXPECT_EQ(outcome["conflicting"], true);
  EXPECT_EQ(outcome["conflicts"], to_json(FlowSet{testing::F("a", "c")}));
  EXPECT_THAT(outcome["common_flows"], IsEmpty());
  EXPECT_THAT(outcome["diffs"], SizeIs(4));
}

TEST_F(CliTest, AnalyzeIdenticalAndDisjoint) {
  auto same = crflow({"analyze", fixture("cr1.json"), fixture("cr1.json")});
  auto o = same.json()["outcome"];
  EXPECT_EQ(o["conflicting"], false);
  EXPECT_THAT(o["conflicts"], IsEmpty());
  EXPECT_THAT(o["diffs"], IsEmpty());

  auto disjoint = crflow(
      {"analyze", fixture("disjoint_pq.json"), fixture("disjoint_rs.json")});
  auto d = disjoint.json()["outcome"];
  EXPECT_EQ(d["conflicting"], false);
  EXPECT_THAT(d["diffs"], SizeIs(2));
  EXPECT_THAT(disjoint.err, HasSubstr("warning"));
}

TEST_F(CliTest, CheckQueries) {
  auto lively = crflow({"check", fixture("lively_abc.json"), "--lively"});
  ASSERT_EQ(lively.code, cli::kOk) << lively.err;
  auto result = lively.json()["outcome"]["results"][0];
  EXPECT_EQ(result["result"], false);
  EXPECT_EQ(result["components"], 2);

  auto g = crflow({"check", fixture("grant_ab.json"), "--grant", "a#i", "b#i",
                   "--grant", "b#i", "a#i", "--grant", "a#i", "zz#i"});
  ASSERT_EQ(g.code, cli::kOk) << g.err;
  auto results = g.json()["outcome"]["results"];
  ASSERT_THAT(results, SizeIs(3));
  EXPECT_EQ(results[0]["result"], "permit");
  EXPECT_EQ(results[1]["result"], "deny");
  EXPECT_EQ(results[2]["result"], "undefined");

  auto reach = crflow({"check", fixture("chain_abc.json"), "--reachable", "a#i",
                       "c#i", "--reachable", "c#i", "a#i"});
  ASSERT_EQ(reach.code, cli::kOk) << reach.err;
  EXPECT_EQ(reach.json()["outcome"]["results"][0]["result"], true);
  EXPECT_EQ(reach.json()["outcome"]["results"][1]["result"], false);
}

TEST_F(CliTest, CheckBadQueries) {
  auto unknown = crflow(
      {"check", fixture("chain_abc.json"), "--reachable", "a#i", "zz#i"});
  EXPECT_EQ(unknown.code, cli::kBadQuery);
  EXPECT_THAT(unknown.err, HasSubstr("zz#i"));
  EXPECT_EQ(
      crflow({"check", fixture("chain_abc.json"), "--grant", "a", "b#i"}).code,
      cli::kBadQuery);
  EXPECT_EQ(crflow({"check", fixture("malformed.json"), "--lively"}).code,
            cli::kParse);
}

TEST_F(CliTest, ExportDot) {
  auto r = crflow({"export-dot", fixture("grant_ab.json")});
  ASSERT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.out,
            "digraph cr {\n"
            "  \"a#i\" [shape=ellipse];\n"
            "  \"b#i\" [shape=ellipse];\n"
            "  \"a#i\" -> \"b#i\";\n"
            "}\n");

  auto cr1 = crflow({"export-dot", fixture("cr1.json")}).out;
  auto count = [&](const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = cr1.find(needle); pos != std::string::npos;
         pos = cr1.find(needle, pos + 1)) {
      ++n;
    }
    return n;
  };
  EXPECT_EQ(count("shape="), 3u);
  EXPECT_EQ(count(" -> "), 2u);

  auto empty = crflow({"export-dot", fixture("empty_cr.json")});
  EXPECT_EQ(empty.out, "digraph cr {\n}\n");

  auto table =
      crflow({"translate", fixture("sample_acl.json"), "-o", temp("t1.json")});
  ASSERT_EQ(table.code, cli::kOk);
  auto explicit_dot = crflow({"export-dot", temp("t1.json")}).out;
  EXPECT_THAT(explicit_dot, HasSubstr("\"s1.R\" -> \"o2.W\";"));
}

TEST_F(CliTest, HelpAndMissingSubcommand) {
  EXPECT_EQ(crflow({"--help"}).code, cli::kOk);
  EXPECT_EQ(crflow({}).code, cli::kUsage);
  EXPECT_EQ(crflow({"frobnicate"}).code, cli::kUsage);
}

int run_binary(const std::string& args) {
  std::string command =
      std::string(CRFLOW_BINARY) + " " + args + " >/dev/null 2>&1";
  int status = std::system(command.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

TEST(CliBinaryTest, ExitCodes) {
  EXPECT_EQ(run_binary("translate " + fixture("sample_acl.json")), 0);
  EXPECT_EQ(run_binary("translate " + fixture("malformed.json")), 2);
  EXPECT_EQ(run_binary("translate " + fixture("rbac_cycle.json")), 3);
  EXPECT_EQ(run_binary("compose rule " + fixture("opposing_a.json") + " " +
                       fixture("opposing_b.json") + " --rule " +
                       fixture("rule_reject.json")),
            4);
  EXPECT_EQ(run_binary("check " + fixture("chain_abc.json") +
                       " --reachable a#i nope#i"),
            5);
}

}  // namespace
}  // namespace crflow
