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
#include "lrx/docmodel.h"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "lrx/errors.h"
#include "lrx/text.h"

namespace lrx {

std::string ToString(const TreePath& path) {
  std::string out = "/";
  for (size_t i = 0; i < path.steps.size(); ++i) {
    if (i) out += '/';
    out += std::to_string(path.steps[i]);
  }
  return out;
}

std::string_view ToString(DocKind kind) {
  return kind == DocKind::kTree ? "tree" : "box";
}

std::string ToString(const Location& loc) {
  if (const auto* p = std::get_if<TreePath>(&loc)) return ToString(*p);
  return "#" + std::to_string(std::get<BoxIndex>(loc).value);
}

// ---------------------------------------------------------------------------
// TreeDocument

struct TreeDocument::Index {
  TreeNode root;
  std::vector<const TreeNode*> nodes;
  std::vector<NodeId> parent;
  std::vector<int> depth;
  std::vector<int> child_index;
  std::vector<NodeId> subtree_end;
  std::vector<std::vector<NodeId>> children;
  std::vector<std::string> data;

  explicit Index(TreeNode r) : root(std::move(r)) {
    struct Frame {
      const TreeNode* node;
      NodeId parent;
      int depth;
      int child_index;
    };
    std::vector<Frame> stack{{&root, kNoNode, 0, 0}};
    while (!stack.empty()) {
      Frame f = stack.back();
      stack.pop_back();
      const NodeId id = static_cast<NodeId>(nodes.size());
      nodes.push_back(f.node);
      parent.push_back(f.parent);
      depth.push_back(f.depth);
      child_index.push_back(f.child_index);
      children.emplace_back();
      if (f.parent != kNoNode) children[f.parent].push_back(id);
      for (int i = static_cast<int>(f.node->children.size()) - 1; i >= 0; --i) {
        stack.push_back({&f.node->children[i], id, f.depth + 1, i});
      }
    }
    const int n = static_cast<int>(nodes.size());
    subtree_end.assign(n, 0);
    data.assign(n, {});
    for (int id = n - 1; id >= 0; --id) {
      NodeId end = id + 1;
      std::vector<std::string> parts{nodes[id]->own_text};
      for (NodeId c : children[id]) {
        end = std::max(end, subtree_end[c]);
        parts.push_back(data[c]);
      }
      subtree_end[id] = end;
      data[id] = JoinNonEmpty(parts, " ");
    }
  }
};

TreeDocument::TreeDocument() : TreeDocument(TreeNode{"root", {}, {}, {}}) {}

TreeDocument::TreeDocument(TreeNode root)
    : index_(std::make_shared<const Index>(std::move(root))) {}

const TreeNode& TreeDocument::root() const { return index_->root; }
int TreeDocument::size() const {
  return static_cast<int>(index_->nodes.size());
}
const TreeNode& TreeDocument::node(NodeId id) const {
  return *index_->nodes.at(id);
}
NodeId TreeDocument::parent(NodeId id) const { return index_->parent.at(id); }
int TreeDocument::depth(NodeId id) const { return index_->depth.at(id); }
int TreeDocument::child_index(NodeId id) const {
  return index_->child_index.at(id);
}
const std::vector<NodeId>& TreeDocument::children(NodeId id) const {
  return index_->children.at(id);
}
NodeId TreeDocument::subtree_end(NodeId id) const {
  return index_->subtree_end.at(id);
}
const std::string& TreeDocument::data(NodeId id) const {
  return index_->data.at(id);
}

TreePath TreeDocument::PathOf(NodeId id) const {
  TreePath path;
  for (NodeId n = id; parent(n) != kNoNode; n = parent(n)) {
    path.steps.push_back(child_index(n));
  }
  std::reverse(path.steps.begin(), path.steps.end());
  return path;
}

std::optional<NodeId> TreeDocument::Resolve(const TreePath& path) const {
  NodeId n = 0;
  for (int step : path.steps) {
    const auto& kids = children(n);
    if (step < 0 || step >= static_cast<int>(kids.size())) return std::nullopt;
    n = kids[step];
  }
  return n;
}

NodeId TreeDocument::Lca(NodeId a, NodeId b) const {
  while (depth(a) > depth(b)) a = parent(a);
  while (depth(b) > depth(a)) b = parent(b);
  while (a != b) {
    a = parent(a);
    b = parent(b);
  }
  return a;
}

NodeId TreeDocument::Ancestor(NodeId n, int hops) const {
  for (int i = 0; i < hops && n != kNoNode; ++i) n = parent(n);
  return n;
}

bool TreeDocument::operator==(const TreeDocument& other) const {
  return index_ == other.index_ || root() == other.root();
}

// ---------------------------------------------------------------------------
// BoxDocument

namespace {

double Median(std::vector<double> v) {
  if (v.empty()) return 1;
  std::sort(v.begin(), v.end());
  const size_t mid = v.size() / 2;
  return v.size() % 2 ? v[mid] : (v[mid - 1] + v[mid]) / 2;
}

}  // namespace

std::vector<int> DocumentOrder(const std::vector<TextBox>& boxes,
                               double row_tolerance) {
  std::vector<int> order(boxes.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  if (row_tolerance < 0) {
    std::vector<double> heights;
    for (const auto& b : boxes) heights.push_back(b.h);
    row_tolerance = 0.5 * Median(heights);
  }
  auto key = [&](int i) {
    const TextBox& b = boxes[i];
    return std::tie(b.y, b.x, b.text, b.w, b.h);
  };
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return key(a) < key(b); });
  auto row_key = [&](int i) {
    const TextBox& b = boxes[i];
    return std::tie(b.x, b.y, b.text, b.w, b.h);
  };
  size_t row_begin = 0;
  while (row_begin < order.size()) {
    const double row_y = boxes[order[row_begin]].y;
    size_t row_end = row_begin + 1;
    while (row_end < order.size() &&
           boxes[order[row_end]].y - row_y <= row_tolerance) {
      ++row_end;
    }
    std::stable_sort(order.begin() + row_begin, order.begin() + row_end,
                     [&](int a, int b) { return row_key(a) < row_key(b); });
    row_begin = row_end;
  }
  return order;
}

BoxDocument::BoxDocument(std::vector<TextBox> boxes, double row_tolerance) {
  for (size_t i = 0; i < boxes.size(); ++i) {
    const TextBox& b = boxes[i];
    const bool finite = std::isfinite(b.x) && std::isfinite(b.y) &&
                        std::isfinite(b.w) && std::isfinite(b.h);
    if (!finite || b.x < 0 || b.y < 0 || b.w <= 0 || b.h <= 0) {
      throw ParseError("box " + std::to_string(i) +
                       " has invalid geometry (need x, y >= 0 and w, h > 0)");
    }
  }
  const std::vector<int> order = DocumentOrder(boxes, row_tolerance);
  boxes_.reserve(boxes.size());
  std::vector<double> heights;
  for (int i : order) {
    heights.push_back(boxes[i].h);
    boxes_.push_back(std::move(boxes[i]));
  }
  median_height_ = Median(std::move(heights));
}

// ---------------------------------------------------------------------------
// Locations

NodeId ResolveNode(const TreeDocument& doc, const Location& loc) {
  const auto* path = std::get_if<TreePath>(&loc);
  if (path == nullptr) {
    throw InvalidLocationError("box location used on a tree document");
  }
  auto id = doc.Resolve(*path);
  if (!id) throw InvalidLocationError("tree path " + ToString(*path) +
                                      " does not resolve");
  return *id;
}

int ResolveBox(const BoxDocument& doc, const Location& loc) {
  const auto* idx = std::get_if<BoxIndex>(&loc);
  if (idx == nullptr) {
    throw InvalidLocationError("tree location used on a box document");
  }
  if (idx->value < 0 || idx->value >= doc.size()) {
    throw InvalidLocationError("box index " + std::to_string(idx->value) +
                               " out of range");
  }
  return idx->value;
}

std::string DataAt(const Document& doc, const Location& loc) {
  if (doc.kind() == DocKind::kTree) {
    return doc.tree().data(ResolveNode(doc.tree(), loc));
  }
  return doc.boxes().box(ResolveBox(doc.boxes(), loc)).text;
}

std::vector<NodeId> LocateNodes(const TreeDocument& doc,
                                std::string_view landmark) {
  std::vector<NodeId> out;
  if (landmark.empty()) return out;
  for (NodeId id = 0; id < doc.size(); ++id) {
    if (doc.data(id).find(landmark) == std::string::npos) continue;
    bool child_has = false;
    for (NodeId c : doc.children(id)) {
      if (doc.data(c).find(landmark) != std::string::npos) {
        child_has = true;
        break;
      }
    }
    if (!child_has) out.push_back(id);
  }
  return out;
}

std::vector<int> LocateBoxes(const BoxDocument& doc,
                             std::string_view landmark) {
  std::vector<int> out;
  if (landmark.empty()) return out;
  for (int i = 0; i < doc.size(); ++i) {
    if (doc.box(i).text.find(landmark) != std::string::npos) out.push_back(i);
  }
  return out;
}

std::vector<Location> Locate(const Document& doc, std::string_view landmark) {
  std::vector<Location> out;
  if (doc.kind() == DocKind::kTree) {
    for (NodeId id : LocateNodes(doc.tree(), landmark)) {
      out.emplace_back(doc.tree().PathOf(id));
    }
  } else {
    for (int i : LocateBoxes(doc.boxes(), landmark)) {
      out.emplace_back(BoxIndex{i});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Regions

TreeRegion EnclosingRegion(const TreeDocument& doc,
                           std::span<const NodeId> nodes) {
  if (nodes.empty()) throw Error("EnclosingRegion of an empty location set");
  NodeId lca = nodes[0];
  for (NodeId n : nodes) lca = doc.Lca(lca, n);
  const bool lca_is_member =
      std::find(nodes.begin(), nodes.end(), lca) != nodes.end();
  if (lca_is_member) {
    const NodeId p = doc.parent(lca);
    if (p == kNoNode) return TreeRegion{kNoNode, 0, 0};
    const int idx = doc.child_index(lca);
    return TreeRegion{p, idx, idx};
  }
  int first = doc.size();
  int last = -1;
  for (NodeId n : nodes) {
    const NodeId child = doc.Ancestor(n, doc.depth(n) - doc.depth(lca) - 1);
    first = std::min(first, doc.child_index(child));
    last = std::max(last, doc.child_index(child));
  }
  return TreeRegion{lca, first, last};
}

Rect BoundingRect(const BoxDocument& doc, std::span<const int> boxes) {
  Rect r{1e300, 1e300, -1e300, -1e300};
  for (int i : boxes) {
    const TextBox& b = doc.box(i);
    r.x0 = std::min(r.x0, b.x);
    r.y0 = std::min(r.y0, b.y);
    r.x1 = std::max(r.x1, b.right());
    r.y1 = std::max(r.y1, b.bottom());
  }
  return r;
}

BoxRegion EnclosingRegion(const BoxDocument& doc, std::span<const int> boxes) {
  if (boxes.empty()) throw Error("EnclosingRegion of an empty location set");
  const Rect r = BoundingRect(doc, boxes);
  BoxRegion out;
  for (int i = 0; i < doc.size(); ++i) {
    const TextBox& b = doc.box(i);
    if (b.x < r.x1 && b.right() > r.x0 && b.y < r.y1 && b.bottom() > r.y0) {
      out.boxes.push_back(i);
    }
  }
  return out;
}

Region EncRgn(const std::vector<Location>& locs, const Document& doc) {
  if (locs.empty()) throw Error("EncRgn requires at least one location");
  if (doc.kind() == DocKind::kTree) {
    std::vector<NodeId> nodes;
    for (const auto& l : locs) nodes.push_back(ResolveNode(doc.tree(), l));
    return EnclosingRegion(doc.tree(), nodes);
  }
  std::vector<int> boxes;
  for (const auto& l : locs) boxes.push_back(ResolveBox(doc.boxes(), l));
  return EnclosingRegion(doc.boxes(), boxes);
}

bool IsValidRegion(const TreeDocument& doc, const TreeRegion& region) {
  if (region.anchor == kNoNode) return region.first == 0 && region.last == 0;
  if (region.anchor < 0 || region.anchor >= doc.size()) return false;
  const int n = static_cast<int>(doc.children(region.anchor).size());
  return 0 <= region.first && region.first <= region.last && region.last < n;
}

std::vector<NodeId> RegionRoots(const TreeDocument& doc,
                                const TreeRegion& region) {
  if (!IsValidRegion(doc, region)) {
    throw InvalidLocationError("invalid tree region");
  }
  if (region.anchor == kNoNode) return {0};
  const auto& kids = doc.children(region.anchor);
  return std::vector<NodeId>(kids.begin() + region.first,
                             kids.begin() + region.last + 1);
}

std::pair<NodeId, NodeId> RegionRange(const TreeDocument& doc,
                                      const TreeRegion& region) {
  const std::vector<NodeId> roots = RegionRoots(doc, region);
  return {roots.front(), doc.subtree_end(roots.back())};
}

int RegionNodeCount(const TreeDocument& doc, const TreeRegion& region) {
  auto [b, e] = RegionRange(doc, region);
  return e - b;
}

bool RegionContains(const TreeDocument& doc, const TreeRegion& region,
                    NodeId n) {
  auto [b, e] = RegionRange(doc, region);
  return b <= n && n < e;
}

bool RegionContains(const TreeDocument& doc, const TreeRegion& outer,
                    const TreeRegion& inner) {
  auto [ob, oe] = RegionRange(doc, outer);
  auto [ib, ie] = RegionRange(doc, inner);
  return ob <= ib && ie <= oe;
}

// ---------------------------------------------------------------------------
// Annotations

void Annotation::Validate() const {
  switch (agg.kind) {
    case AggKind::kSingle:
      if (locations.size() != 1 || values.size() != 1) {
        throw Error("single-valued annotation needs exactly one location and "
                    "one value");
      }
      break;
    case AggKind::kOrderedList:
      if (locations.empty() || values.size() != locations.size()) {
        throw Error("list annotation needs one value per location");
      }
      break;
    case AggKind::kConcat:
      if (locations.empty() || values.size() != 1) {
        throw Error("concat annotation needs locations and one joined value");
      }
      break;
  }
}

std::vector<std::string> Annotation::PerLocationValues(
    const Document& doc) const {
  if (agg.kind != AggKind::kConcat || locations.size() == 1) {
    if (agg.kind == AggKind::kConcat) return {values.at(0)};
    return values;
  }
  std::vector<std::string> out;
  for (const auto& l : locations) out.push_back(Trim(DataAt(doc, l)));
  return out;
}

std::optional<FieldValue> Aggregate(const Aggregation& agg,
                                    std::vector<std::string> parts) {
  if (parts.empty()) return std::nullopt;
  switch (agg.kind) {
    case AggKind::kSingle:
      if (parts.size() != 1) return std::nullopt;
      return parts;
    case AggKind::kOrderedList:
      return parts;
    case AggKind::kConcat:
      return FieldValue{Join(parts, agg.separator)};
  }
  return std::nullopt;
}

}  // namespace lrx
