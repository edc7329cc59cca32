// Copyright 2026 The lrx Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
#include <gtest/gtest.h>

#include "lrx/errors.h"
#include "lrx/value_extract.h"
#include "test_util.h"

namespace lrx {
namespace {

using testing::TreeDoc;

std::string Apply(const TextProgram& p, std::string_view text) {
  return ExecText(p, text).value_or("<null>");
}

TEST(SynthesizeText, DateAfterLabel) {
  const std::vector<TextExample> ex = {{"Date: 12/03/2020", "12/03/2020"}};
  const TextProgram p = SynthesizeText(ex);
  EXPECT_EQ(Apply(p, "Date: 12/03/2020"), "12/03/2020");
  EXPECT_EQ(Apply(p, "Date: 1/2/21"), "1/2/21");
}

TEST(SynthesizeText, AirportCode) {
  const std::vector<TextExample> ex = {{"To Denver (DEN)", "DEN"}};
  const TextProgram p = SynthesizeText(ex);
  EXPECT_EQ(Apply(p, "To Denver (DEN)"), "DEN");
  EXPECT_EQ(Apply(p, "To San Francisco (SFO)"), "SFO");
}

TEST(SynthesizeText, IdentityWhenWholeTextIsTheValue) {
  const std::vector<TextExample> ex = {{" 8:18 PM ", "8:18 PM"}, {"9:10 AM", "9:10 AM"}};
  EXPECT_EQ(SynthesizeText(ex), TextProgram::Identity());
  EXPECT_FALSE(ExecText(TextProgram::Identity(), "  "));
}

TEST(SynthesizeText, ConsistentWithEveryExample) {
  const std::vector<TextExample> ex = {{"Total Amount: $1,234.50 due", "$1,234.50"},
                                       {"Total Amount: $12.00 due", "$12.00"},
                                       {"Total Amount: $7.25 due now", "$7.25"}};
  const TextProgram p = SynthesizeText(ex);
  for (const auto& e : ex) EXPECT_EQ(Apply(p, e.text), e.expected);
}

TEST(SynthesizeText, FailsWhenValueIsAbsent) {
  const std::vector<TextExample> ex = {{"abc", "xyz"}};
  EXPECT_THROW(SynthesizeText(ex), SynthesisError);
  EXPECT_THROW(SynthesizeText(std::span<const TextExample>{}), SynthesisError);
}

TEST(ExecText, ExtractOutOfRangeIsNull) {
  const TextProgram p = TextProgram::Extract(
      {PatternToken::Of(TokenKind::kDate), 1, false}, {PatternToken::Of(TokenKind::kDate), 1, true});
  EXPECT_EQ(Apply(p, "on 3/4/2021"), "3/4/2021");
  EXPECT_FALSE(ExecText(p, "no date here"));
}

TEST(Selector, SecondCellOfRow) {
  Document d = TreeDoc("d", "<tr><td>Depart:</td><td>8:18 PM</td></tr>");
  const TreeRegion reg{kNoNode, 0, 0};
  const NodeSelector s = SynthesizeSelector({{&d.tree(), reg}}, {{2}});
  EXPECT_EQ(EvalSelector(s, d.tree(), reg), std::vector<NodeId>{2});
  EXPECT_LE(s.AtomCount(), 2);
  EXPECT_NE(ToCss(s).find(":nth-child(2)"), std::string::npos);
}

TEST(Selector, NthChildCountsFromTheRegionSpan) {
  // Region spans cells 1..2 of a wider row; the value is its second cell.
  Document d = TreeDoc("d", "<tr><td>x</td><td>Depart:</td><td>8:18 PM</td><td>y</td></tr>");
  const TreeRegion reg{0, 1, 2};
  const NodeSelector s = SynthesizeSelector({{&d.tree(), reg}}, {{3}});
  EXPECT_EQ(EvalSelector(s, d.tree(), reg), std::vector<NodeId>{3});
  EXPECT_NE(ToCss(s).find(":nth-child(2)"), std::string::npos);
}

TEST(Selector, PrefersClassOverPosition) {
  Document a = TreeDoc("a", "<div><span>Depart:</span><span class='t'>8:18 PM</span></div>");
  Document b = TreeDoc("b", "<div><span>Depart:</span><i>!</i><span class='t'>9 PM</span></div>");
  const TreeRegion reg{kNoNode, 0, 0};
  const NodeSelector s = SynthesizeSelector({{&a.tree(), reg}, {&b.tree(), reg}}, {{2}, {3}});
  EXPECT_EQ(ToCss(s), ".t");
}

TEST(Selector, ConsistentOnRandomTrees) {
  testing::Rng r(71);
  int synthesized = 0;
  for (int t = 0; t < 200; ++t) {
    TreeDocument doc(testing::RandomTree(r, 30, {"a"}));
    const NodeId target = testing::Uniform(r, 0, doc.size() - 1);
    const TreeRegion reg{kNoNode, 0, 0};
    try {
      const NodeSelector s = SynthesizeSelector({{&doc, reg}}, {{target}});
      EXPECT_EQ(EvalSelector(s, doc, reg), std::vector<NodeId>{target});
      EXPECT_LE(static_cast<int>(s.steps.size()), SelectorConfig{}.max_steps);
      ++synthesized;
    } catch (const SynthesisError&) {
      // Deep targets can need more steps than allowed.
      EXPECT_GT(doc.depth(target) + 1, SelectorConfig{}.max_steps);
    }
  }
  EXPECT_GT(synthesized, 100);
}

TEST(SynthesizeValue, BoxRegionText) {
  Document d = testing::BoxDoc("b", {testing::B("Chassis number", 40, 100),
                                     testing::B("MA3EJKD", 40, 130),
                                     testing::B("1S00L2", 112, 130)});
  const BoxRegion reg{{0, 1, 2}};
  const std::vector<ValueExample> ex = {
      {&d, reg, {BoxIndex{1}, BoxIndex{2}}, {"MA3EJKD 1S00L2"}}};
  const ValueProgram p = SynthesizeValue(ex);
  EXPECT_EQ(ExecValue(p, d, reg), (std::optional<std::vector<std::string>>{{"MA3EJKD 1S00L2"}}));
}

TEST(SynthesizeValue, TreeListValues) {
  Document d = TreeDoc("d",
                       "<table><tr><td>From:</td><td>Seattle (SEA)</td></tr>"
                       "<tr><td>From:</td><td>Denver (DEN)</td></tr></table>");
  const TreeRegion reg{kNoNode, 0, 0};
  const std::vector<ValueExample> ex = {
      {&d, reg, {TreePath{{0, 1}}, TreePath{{1, 1}}}, {"SEA", "DEN"}}};
  const ValueProgram p = SynthesizeValue(ex);
  EXPECT_EQ(ExecValue(p, d, reg), (std::optional<std::vector<std::string>>{{"SEA", "DEN"}}));
}

}  // namespace
}  // namespace lrx
