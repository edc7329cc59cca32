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
#include <algorithm>

#include <gtest/gtest.h>

#include "lrx/docmodel.h"
#include "lrx/errors.h"
#include "lrx/text.h"
#include "test_util.h"

namespace lrx {
namespace {

using testing::B;
using testing::MinimalRegionOracle;
using testing::RandomTree;
using testing::Rng;
using testing::TreeDoc;

const std::vector<std::string> kWords = {"", "Depart:", "Date", "8:18 PM", "x",
                                         "Date x", "Arrive:"};

// Pre-order walk collecting own texts, the definition of node data.
void DataOracle(const TreeNode& n, std::vector<std::string>& out) {
  out.push_back(Trim(n.own_text));
  for (const auto& c : n.children) DataOracle(c, out);
}

std::string DataOf(const TreeNode& n) {
  std::vector<std::string> parts;
  DataOracle(n, parts);
  return JoinNonEmpty(parts, " ");
}

const TreeNode* Walk(const TreeNode& root, const TreePath& p) {
  const TreeNode* n = &root;
  for (int s : p.steps) n = &n->children.at(s);
  return n;
}

TEST(DataAt, LeafIsOwnText) {
  Document d = TreeDoc("d", "<td>Depart:</td>");
  EXPECT_EQ(DataAt(d, TreePath{}), "Depart:");
}

TEST(DataAt, JoinsChildTextsInPreOrder) {
  Document d = TreeDoc("d", "<td><span>Friday,</span><span>Apr 3</span></td>");
  EXPECT_EQ(DataAt(d, TreePath{}), "Friday, Apr 3");
}

TEST(DataAt, BoxIsItsText) {
  Document d = testing::BoxDoc("b", {B("SAGDQU", 10, 10)});
  EXPECT_EQ(DataAt(d, BoxIndex{0}), "SAGDQU");
}

TEST(DataAt, BadLocationThrows) {
  Document d = TreeDoc("d", "<td>x</td>");
  EXPECT_THROW(DataAt(d, TreePath{{3}}), InvalidLocationError);
  Document b = testing::BoxDoc("b", {B("x", 0, 0)});
  EXPECT_THROW(DataAt(b, BoxIndex{1}), InvalidLocationError);
}

TEST(DataAt, MatchesRecursiveOracleOnRandomTrees) {
  Rng r(11);
  for (int t = 0; t < 200; ++t) {
    TreeNode root = RandomTree(r, 40, kWords);
    TreeDocument doc(root);
    for (NodeId n = 0; n < doc.size(); ++n) {
      const TreeNode* via_path = Walk(root, doc.PathOf(n));
      EXPECT_EQ(doc.data(n), DataOf(*via_path));
      EXPECT_EQ(doc.Resolve(doc.PathOf(n)), n);
    }
  }
}

TEST(TreeDocument, LcaMatchesParentWalk) {
  Rng r(12);
  for (int t = 0; t < 100; ++t) {
    TreeDocument doc(RandomTree(r, 40, kWords));
    for (int q = 0; q < 20; ++q) {
      const NodeId a = testing::Uniform(r, 0, doc.size() - 1);
      const NodeId b = testing::Uniform(r, 0, doc.size() - 1);
      std::vector<NodeId> up;
      for (NodeId x = a; x != kNoNode; x = doc.parent(x)) up.push_back(x);
      NodeId y = b;
      while (std::find(up.begin(), up.end(), y) == up.end()) y = doc.parent(y);
      EXPECT_EQ(doc.Lca(a, b), y);
    }
  }
}

TEST(Locate, AbsentLandmarkIsEmpty) {
  Document d = TreeDoc("d", "<tr><td>Depart:</td></tr>");
  EXPECT_TRUE(Locate(d, "ZZZ").empty());
}

TEST(Locate, TwoFlightLegs) {
  Document d = TreeDoc("d",
                       "<div><table><tr><td>Depart:</td><td>8:18 PM</td></tr></table>"
                       "<table><tr><td>Depart:</td><td>9:10 AM</td></tr></table></div>");
  auto locs = Locate(d, "Depart:");
  ASSERT_EQ(locs.size(), 2u);
  EXPECT_EQ(std::get<TreePath>(locs[0]), (TreePath{{0, 0, 0}}));
  EXPECT_EQ(std::get<TreePath>(locs[1]), (TreePath{{1, 0, 0}}));
}

TEST(Locate, ThreeLeavesInPreOrder) {
  Document d = TreeDoc("d",
                       "<div><p>Date</p><div><span>Due Date</span></div>"
                       "<p>x</p><p>Date of issue</p></div>");
  auto locs = Locate(d, "Date");
  std::vector<TreePath> got;
  for (auto& l : locs) got.push_back(std::get<TreePath>(l));
  // Brute force: deepest nodes containing the landmark.
  const TreeDocument& t = d.tree();
  std::vector<TreePath> want;
  for (NodeId n = 0; n < t.size(); ++n) {
    if (t.data(n).find("Date") == std::string::npos) continue;
    bool child_has = false;
    for (NodeId c : t.children(n)) {
      child_has = child_has || t.data(c).find("Date") != std::string::npos;
    }
    if (!child_has) want.push_back(t.PathOf(n));
  }
  EXPECT_EQ(got, want);
  EXPECT_EQ(got.size(), 3u);
}

TEST(Locate, PropertiesOnRandomTrees) {
  Rng r(13);
  for (int t = 0; t < 200; ++t) {
    Document d{"d", TreeDocument(RandomTree(r, 40, kWords))};
    for (const std::string lm : {"Date", "Depart:", "x", "PM"}) {
      auto locs = Locate(d, lm);
      for (size_t i = 0; i < locs.size(); ++i) {
        EXPECT_NE(DataAt(d, locs[i]).find(lm), std::string::npos);
        if (i > 0) EXPECT_LT(ResolveNode(d.tree(), locs[i - 1]), ResolveNode(d.tree(), locs[i]));
      }
    }
  }
}

TEST(EncRgn, SingleLocationIsItsSubtree) {
  Document d = TreeDoc("d", "<tr><td>a</td><td>b</td></tr>");
  auto reg = std::get<TreeRegion>(EncRgn({TreePath{{1}}}, d));
  EXPECT_EQ(reg, (TreeRegion{0, 1, 1}));
  Document b = testing::BoxDoc("b", {B("a", 0, 0), B("b", 100, 0)});
  EXPECT_EQ(std::get<BoxRegion>(EncRgn({BoxIndex{1}}, b)).boxes, std::vector<int>{1});
}

TEST(EncRgn, SiblingSpan) {
  Document d = TreeDoc("d", "<tr><td>0</td><td>1</td><td>2</td><td>3</td></tr>");
  auto reg = std::get<TreeRegion>(EncRgn({TreePath{{1}}, TreePath{{3}}}, d));
  EXPECT_EQ(reg, (TreeRegion{0, 1, 3}));
  EXPECT_EQ(reg, MinimalRegionOracle(d.tree(), {2, 4}));
}

TEST(EncRgn, LandmarkAndValueCells) {
  Document d = TreeDoc("d", "<table><tr><td>Depart:</td><td>Fri 8:18 PM</td></tr></table>");
  auto reg = std::get<TreeRegion>(EncRgn({TreePath{{0, 0}}, TreePath{{0, 1}}}, d));
  EXPECT_EQ(reg, (TreeRegion{1, 0, 1}));
}

TEST(EncRgn, EmptySetThrows) {
  Document d = TreeDoc("d", "<p>x</p>");
  EXPECT_THROW(EncRgn({}, d), Error);
}

TEST(EncRgn, EqualsBruteForceMinimumOnRandomTrees) {
  Rng r(14);
  for (int t = 0; t < 300; ++t) {
    TreeDocument doc(RandomTree(r, 50, kWords));
    const int k = testing::Uniform(r, 1, 4);
    std::vector<NodeId> nodes;
    for (int i = 0; i < k; ++i) nodes.push_back(testing::Uniform(r, 0, doc.size() - 1));
    const TreeRegion got = EnclosingRegion(doc, nodes);
    EXPECT_EQ(got, MinimalRegionOracle(doc, nodes));
    // Shrinking the span on either side loses an input node.
    if (got.anchor != kNoNode && got.first < got.last) {
      for (TreeRegion smaller : {TreeRegion{got.anchor, got.first + 1, got.last},
                                 TreeRegion{got.anchor, got.first, got.last - 1}}) {
        bool all = true;
        for (NodeId n : nodes) all = all && RegionContains(doc, smaller, n);
        EXPECT_FALSE(all);
      }
    }
  }
}

TEST(EncRgn, MonotoneOnRandomTrees) {
  Rng r(15);
  for (int t = 0; t < 300; ++t) {
    TreeDocument doc(RandomTree(r, 50, kWords));
    std::vector<NodeId> big;
    for (int i = 0; i < 5; ++i) big.push_back(testing::Uniform(r, 0, doc.size() - 1));
    std::vector<NodeId> small(big.begin(), big.begin() + testing::Uniform(r, 1, 5));
    EXPECT_TRUE(RegionContains(doc, EnclosingRegion(doc, big), EnclosingRegion(doc, small)));
  }
}

TEST(EncRgn, BoxMonotoneOnRandomLayouts) {
  Rng r(16);
  for (int t = 0; t < 200; ++t) {
    std::vector<TextBox> boxes;
    const int n = testing::Uniform(r, 1, 20);
    for (int i = 0; i < n; ++i) {
      boxes.push_back(B("b" + std::to_string(i), testing::Uniform(r, 0, 500),
                        testing::Uniform(r, 0, 500), testing::Uniform(r, 5, 80),
                        testing::Uniform(r, 5, 30)));
    }
    BoxDocument doc(boxes);
    std::vector<int> big;
    for (int i = 0; i < 4; ++i) big.push_back(testing::Uniform(r, 0, n - 1));
    std::vector<int> small(big.begin(), big.begin() + testing::Uniform(r, 1, 4));
    const BoxRegion rb = EnclosingRegion(doc, big);
    const BoxRegion rs = EnclosingRegion(doc, small);
    EXPECT_TRUE(BoundingRect(doc, rb.boxes).Contains(BoundingRect(doc, rs.boxes)));
    for (int b : rs.boxes) {
      EXPECT_TRUE(std::find(rb.boxes.begin(), rb.boxes.end(), b) != rb.boxes.end());
    }
  }
}

TEST(BoxDocument, SingleBox) {
  BoxDocument d({{"Date", 10, 10, 40, 12}});
  EXPECT_EQ(d.size(), 1);
}

TEST(BoxDocument, SameRowSortedByX) {
  BoxDocument d({{"b", 100, 10, 10, 12}, {"a", 10, 10, 10, 12}});
  EXPECT_EQ(d.box(0).text, "a");
  EXPECT_EQ(d.box(1).text, "b");
}

TEST(BoxDocument, RowToleranceBucketsNearbyTops) {
  BoxDocument d({{"right", 100, 10, 10, 12}, {"left", 10, 13, 10, 12}}, 5);
  EXPECT_EQ(d.box(0).text, "left");
  BoxDocument strict({{"right", 100, 10, 10, 12}, {"left", 10, 13, 10, 12}}, 1);
  EXPECT_EQ(strict.box(0).text, "right");
}

TEST(BoxDocument, RejectsDegenerateBoxes) {
  EXPECT_THROW(BoxDocument({{"x", 0, 0, 0, 10}}), ParseError);
  EXPECT_THROW(BoxDocument({{"x", 0, 0, 10, -1}}), ParseError);
  EXPECT_THROW(BoxDocument({{"x", -1, 0, 10, 10}}), ParseError);
}

TEST(Aggregate, Kinds) {
  EXPECT_EQ(Aggregate({AggKind::kSingle, ""}, {"a"}), (FieldValue{"a"}));
  EXPECT_FALSE(Aggregate({AggKind::kSingle, ""}, {"a", "b"}));
  EXPECT_FALSE(Aggregate({AggKind::kSingle, ""}, {}));
  EXPECT_EQ(Aggregate({AggKind::kOrderedList, ""}, {"a", "b"}), (FieldValue{"a", "b"}));
  EXPECT_EQ(Aggregate({AggKind::kConcat, "-"}, {"a", "b"}), (FieldValue{"a-b"}));
}

TEST(Annotation, ValidateShapes) {
  Annotation single{{TreePath{}}, {AggKind::kSingle, ""}, {"a"}};
  EXPECT_NO_THROW(single.Validate());
  Annotation two{{TreePath{}, TreePath{{0}}}, {AggKind::kSingle, ""}, {"a"}};
  EXPECT_THROW(two.Validate(), Error);
  Annotation list{{TreePath{}, TreePath{{0}}}, {AggKind::kOrderedList, ""}, {"a"}};
  EXPECT_THROW(list.Validate(), Error);
}

}  // namespace
}  // namespace lrx
