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

#include "crflow/analyze.h"

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include <algorithm>

#include "crflow/compose.h"
#include "support/fixtures.h"
#include "support/generators.h"

namespace crflow {
namespace {

using testing::Cr;
using testing::F;
using ::testing::IsEmpty;
using ::testing::UnorderedElementsAre;

TEST(ConflictsTest, WorkedExample) {
  auto a = testing::conflict_example_first();
  auto b = testing::conflict_example_second();
  EXPECT_THAT(conflicts(a, b), UnorderedElementsAre(F("a", "c")));
  EXPECT_TRUE(conflicting(a, b));
  // (c, a) is over shared interfaces but in neither CR: not a conflict.
  EXPECT_FALSE(conflicts(a, b).contains(F("c", "a")));
}

TEST(ConflictsTest, IdenticalCrs) {
  auto x = testing::conflict_example_first();
  EXPECT_THAT(conflicts(x, x), IsEmpty());
  EXPECT_FALSE(conflicting(x, x));
}

TEST(ConflictsTest, SharedPairPresentInOneSide) {
  auto a = Cr({"x", "y"}, {{"x", "y"}});
  auto b = Cr({"x", "y"}, {});
  EXPECT_THAT(conflicts(a, b), UnorderedElementsAre(F("x", "y")));
  EXPECT_THAT(one_sided_conflicts(a, b), UnorderedElementsAre(F("x", "y")));
  EXPECT_THAT(one_sided_conflicts(b, a), IsEmpty());
}

TEST(ConflictsTest, DisjointInterfaces) {
  auto a = Cr({"p", "q"}, {{"p", "q"}});
  auto b = Cr({"r", "s"}, {{"s", "r"}});
  EXPECT_FALSE(conflicting(a, b));
  EXPECT_EQ(diffs(a, b), (FlowSet{F("p", "q"), F("s", "r")}));
}

TEST(CommonFlowsTest, Examples) {
  auto a = testing::conflict_example_first();
  auto b = testing::conflict_example_second();
  EXPECT_THAT(common_flows(a, b), IsEmpty());
  EXPECT_EQ(common_flows(a, a), a.flows());
  EXPECT_THAT(common_flows(Cr({"p", "q", "r"}, {{"p", "q"}, {"q", "r"}}),
                           Cr({"p", "q"}, {{"p", "q"}})),
              UnorderedElementsAre(F("p", "q")));
}

TEST(DiffsTest, Examples) {
  auto a = testing::conflict_example_first();
  auto b = testing::conflict_example_second();
  EXPECT_THAT(diffs(a, b), UnorderedElementsAre(F("a", "c"), F("b", "c"),
                                                F("a", "d"), F("d", "c")));
  EXPECT_THAT(diffs(a, a), IsEmpty());
  EXPECT_THAT(diffs(Cr({"x", "y"}, {{"x", "y"}}), Cr({"x", "y"}, {})),
              UnorderedElementsAre(F("x", "y")));
}

TEST(ConflictsTest, MergeAgainstOperand) {
  auto a = testing::conflict_example_first();
  auto b = testing::conflict_example_second();
  // (a,d) and (d,c) touch d, which the first CR lacks.
  EXPECT_THAT(conflicts(merge(a, b), a), IsEmpty());
}

TEST(AnalyzeProperties, RandomCrs) {
  testing::Rng rng(301);
  for (int round = 0; round < 500; ++round) {
    auto a = testing::random_cr(rng);
    auto b = testing::random_cr(rng);
    auto c = conflicts(a, b);
    auto common = common_flows(a, b);
    auto d = diffs(a, b);

    EXPECT_EQ(c, conflicts(b, a));
    EXPECT_TRUE(std::includes(d.begin(), d.end(), c.begin(), c.end()));
    for (const auto& f : c) {
      EXPECT_FALSE(common.contains(f));
      for (const auto* id : {&f.from(), &f.to()}) {
        EXPECT_TRUE(a.has_interface(*id) && b.has_interface(*id));
      }
    }
    EXPECT_EQ(conflicting(a, b), !c.empty());

    FlowSet united = a.flows();
    united.insert(b.flows().begin(), b.flows().end());
    FlowSet rebuilt = d;
    rebuilt.insert(common.begin(), common.end());
    EXPECT_EQ(rebuilt, united);
    EXPECT_EQ(d.size() + common.size(), united.size());

    // One-sided conflicts partition the symmetric ones.
    auto ab = one_sided_conflicts(a, b);
    auto ba = one_sided_conflicts(b, a);
    FlowSet both = ab;
    both.insert(ba.begin(), ba.end());
    EXPECT_EQ(both, c);
    EXPECT_EQ(ab.size() + ba.size(), c.size());
  }
}

}  // namespace
}  // namespace crflow
