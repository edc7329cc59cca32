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
#include <cmath>

#include <gtest/gtest.h>

#include "lrx/blueprint.h"
#include "lrx/errors.h"
#include "test_util.h"

namespace lrx {
namespace {

using testing::B;
using testing::BoxDoc;
using testing::TreeDoc;

constexpr double kEps = 1e-12;

TEST(TreeBlueprint, KeepsCommonValuePathsFromRegionRoots) {
  Document a = TreeDoc("a",
                       "<table><tr><td>Depart:</td><td>8:18 PM</td></tr>"
                       "<tr><td><b>Arrive:</b></td><td>9:10 PM</td></tr></table>");
  Document b = TreeDoc("b",
                       "<table><tr><td>Depart:</td><td>6:05 AM</td></tr>"
                       "<tr><td><b>Arrive:</b></td><td>7:40 AM</td></tr></table>");
  const CommonValueIndex idx = CommonValues({&a.tree(), &b.tree()});
  EXPECT_TRUE(idx.Contains("Depart:"));
  EXPECT_FALSE(idx.Contains("8:18 PM"));
  const TreeBlueprint whole = BlueprintTree(TreeRegion{}, a.tree(), idx);
  EXPECT_EQ(whole.paths, (std::set<std::string>{"/table/tr/td", "/table/tr/td/b"}));
  const TreeBlueprint row = BlueprintTree(TreeRegion{0, 1, 1}, a.tree(), idx);
  EXPECT_EQ(row.paths, (std::set<std::string>{"/tr/td", "/tr/td/b"}));
  EXPECT_EQ(BlueprintTree(TreeRegion{0, 0, 0}, a.tree(), idx),
            BlueprintTree(TreeRegion{0, 0, 0}, b.tree(), idx));
}

TEST(TreeBlueprint, JaccardDistance) {
  TreeBlueprint ab{{"/a", "/b"}}, ac{{"/a", "/c"}}, empty;
  EXPECT_NEAR(Delta(ab, ac), 2.0 / 3.0, kEps);
  EXPECT_EQ(Delta(ab, ab), 0);
  EXPECT_EQ(Delta(empty, empty), 0);
  EXPECT_EQ(Delta(ab, empty), 1);
  EXPECT_THROW(Delta(Blueprint{ab}, Blueprint{BoxBlueprint{}}), Error);
}

TreeBlueprint RandomTreeBp(testing::Rng& r) {
  TreeBlueprint bp;
  const int n = testing::Uniform(r, 0, 5);
  for (int i = 0; i < n; ++i) bp.paths.insert("/p" + std::to_string(testing::Uniform(r, 0, 6)));
  return bp;
}

BoxBlueprint RandomBoxBp(testing::Rng& r) {
  static const std::vector<std::string> kGrams = {"Date", "Qty", "Part No"};
  auto cls = [&]() -> NeighborClass {
    switch (testing::Uniform(r, 0, 2)) {
      case 0:
        return {NeighborKind::kAbsent, {}};
      case 1:
        return {NeighborKind::kVariable, {}};
      default:
        return {NeighborKind::kFrequent, kGrams[r() % kGrams.size()]};
    }
  };
  BoxBlueprint bp;
  const int n = testing::Uniform(r, 0, 4);
  for (int i = 0; i < n; ++i) {
    bp.summaries.push_back({kGrams[r() % kGrams.size()], cls(), {}, cls(), {}});
  }
  return bp;
}

template <typename Bp, typename Gen>
void CheckPseudoMetric(Gen gen) {
  testing::Rng r(41);
  for (int t = 0; t < 2000; ++t) {
    const Bp x = gen(r), y = gen(r), z = gen(r);
    const double xy = Delta(x, y);
    EXPECT_GE(xy, 0);
    EXPECT_LE(xy, 1);
    EXPECT_EQ(Delta(x, x), 0);
    EXPECT_NEAR(xy, Delta(y, x), kEps);
    EXPECT_LE(Delta(x, z), xy + Delta(y, z) + kEps);
  }
}

TEST(TreeBlueprint, DeltaIsPseudoMetric) { CheckPseudoMetric<TreeBlueprint>(RandomTreeBp); }

TEST(BoxBlueprint, DeltaIsPseudoMetric) { CheckPseudoMetric<BoxBlueprint>(RandomBoxBp); }

TEST(BoxBlueprint, DeltaOfOneEdit) {
  BoxBlueprint a{{{"Date", {}, {}, {}, {}}, {"Qty", {}, {}, {}, {}}}};
  BoxBlueprint b = a;
  b.summaries.push_back({"Total", {}, {}, {}, {}});
  // One insertion over lengths 2 and 3: 2 * 1 / (5 + 1).
  EXPECT_NEAR(Delta(a, b), 1.0 / 3.0, kEps);
}

std::vector<TextBox> Invoice(double dx, double dy) {
  return {B("Invoice Date", 40 + dx, 40 + dy), B("12/03/2020", 40 + dx, 70 + dy),
          B("Part No", 40 + dx, 200 + dy), B("PN-12345", 160 + dx, 200 + dy),
          B("Qty", 320 + dx, 200 + dy), B("4", 380 + dx, 200 + dy)};
}

TEST(BoxBlueprint, TranslationInvariant) {
  Document base = BoxDoc("a", Invoice(0, 0));
  const CommonValueIndex idx = FrequentNGrams({&base.boxes()}, 5);
  const Blueprint bp0 = DocumentBlueprint(base, idx);
  testing::Rng r(42);
  for (int t = 0; t < 20; ++t) {
    Document moved = BoxDoc("b", Invoice(testing::Uniform(r, 0, 300), testing::Uniform(r, 0, 300)));
    EXPECT_EQ(DocumentBlueprint(moved, idx), bp0);
  }
}

TEST(BoxBlueprint, SummaryClassifiesNeighbors) {
  Document d = BoxDoc("a", Invoice(0, 0));
  CommonValueIndex idx;
  idx.values = {"Invoice Date", "Part No", "Qty"};
  const BoxSummary s = SummarizeBox(d.boxes(), 0, idx);
  EXPECT_EQ(s.ngram, "Invoice Date");
  EXPECT_EQ(s.bottom.kind, NeighborKind::kVariable);
  EXPECT_EQ(s.top.kind, NeighborKind::kAbsent);
  // Part No row: value to the right, nothing relevant above within radius.
  const BoxSummary part = SummarizeBox(d.boxes(), 2, idx);
  EXPECT_EQ(part.right.kind, NeighborKind::kVariable);
}

TEST(FrequentNGrams, KeepsUpperHalfByDocumentFrequency) {
  Document a = BoxDoc("a", {B("Total Amount", 0, 0), B("x", 0, 100)});
  Document b = BoxDoc("b", {B("Total Amount", 0, 0), B("y", 0, 100)});
  Document c = BoxDoc("c", {B("Total", 0, 0), B("z", 0, 100)});
  const CommonValueIndex idx = FrequentNGrams({&a.boxes(), &b.boxes(), &c.boxes()}, 2);
  // Distinct n-grams: Total(3) Total Amount(2) Amount(2) x y z(1): ceil(6/2)=3 kept.
  EXPECT_EQ(idx.ranked.size(), 3u);
  EXPECT_EQ(idx.values, (std::set<std::string>{"Total", "Total Amount", "Amount"}));
  const CommonValueIndex all = FrequentNGrams({&a.boxes(), &b.boxes(), &c.boxes()}, 2, true);
  EXPECT_EQ(all.values, (std::set<std::string>{"Total"}));
  EXPECT_EQ(all.LongestIn("Grand Total Amount", 5), "Total");
  EXPECT_EQ(idx.LongestIn("Grand Total Amount", 5), "Total Amount");
}

TEST(ModeBlueprint, MostFrequentFirstOnTies) {
  TreeBlueprint a{{"/a"}}, b{{"/b"}};
  EXPECT_EQ(ModeBlueprint({a, b, b}), Blueprint{b});
  EXPECT_EQ(ModeBlueprint({a, b}), Blueprint{a});
  EXPECT_THROW(ModeBlueprint({}), Error);
}

}  // namespace
}  // namespace lrx
