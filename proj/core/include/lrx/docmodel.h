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
// Uniform document model: labeled trees (normalized HTML) and geometric text
// boxes (OCR output), plus the location, region and annotation vocabulary the
// rest of the library is written against.
//
// Documents are immutable once constructed. TreeDocument and BoxDocument are
// cheap to copy (shared immutable state) and safe to read from many threads.

#ifndef LRX_DOCMODEL_H_
#define LRX_DOCMODEL_H_

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace lrx {

// ---------------------------------------------------------------------------
// Trees

struct TreeNode {
  std::string tag;
  std::map<std::string, std::string> attributes;
  std::string own_text;
  std::vector<TreeNode> children;

  bool operator==(const TreeNode&) const = default;
};

// Pre-order index of a node inside one TreeDocument.
using NodeId = int;
inline constexpr NodeId kNoNode = -1;

// Child indices from the root; the empty path is the root itself.
struct TreePath {
  std::vector<int> steps;

  auto operator<=>(const TreePath&) const = default;
  bool operator==(const TreePath&) const = default;
};

std::string ToString(const TreePath& path);

class TreeDocument {
 public:
  TreeDocument();
  explicit TreeDocument(TreeNode root);

  const TreeNode& root() const;
  int size() const;

  const TreeNode& node(NodeId id) const;
  NodeId parent(NodeId id) const;  // kNoNode for the root
  int depth(NodeId id) const;      // root has depth 0
  int child_index(NodeId id) const;
  const std::vector<NodeId>& children(NodeId id) const;
  // Exclusive end of the pre-order range [id, subtree_end(id)).
  NodeId subtree_end(NodeId id) const;
  int subtree_size(NodeId id) const { return subtree_end(id) - id; }

  // Pre-order concatenation of own texts below `id`, single-space joined.
  const std::string& data(NodeId id) const;

  TreePath PathOf(NodeId id) const;
  std::optional<NodeId> Resolve(const TreePath& path) const;

  bool IsAncestorOrSelf(NodeId ancestor, NodeId n) const {
    return ancestor <= n && n < subtree_end(ancestor);
  }
  NodeId Lca(NodeId a, NodeId b) const;
  // Ancestor `hops` levels up, kNoNode when that climbs past the root.
  NodeId Ancestor(NodeId n, int hops) const;

  bool operator==(const TreeDocument& other) const;

 private:
  struct Index;
  std::shared_ptr<const Index> index_;
};

// ---------------------------------------------------------------------------
// Boxes

struct TextBox {
  std::string text;
  double x = 0;
  double y = 0;
  double w = 0;
  double h = 0;

  double cx() const { return x + w / 2; }
  double cy() const { return y + h / 2; }
  double right() const { return x + w; }
  double bottom() const { return y + h; }

  bool operator==(const TextBox&) const = default;
};

// Sorts boxes top-to-bottom in rows (boxes whose top edges are within
// `row_tolerance` of the row's first box share a row) and left-to-right inside
// a row. A negative tolerance means 0.5 x median box height. Returns the
// permutation: result[i] is the original index of the i-th sorted box.
std::vector<int> DocumentOrder(const std::vector<TextBox>& boxes,
                               double row_tolerance = -1);

class BoxDocument {
 public:
  BoxDocument() = default;
  // Validates dimensions (w > 0, h > 0, finite, non-negative origin) and
  // sorts into document order. Throws ParseError on invalid boxes.
  explicit BoxDocument(std::vector<TextBox> boxes, double row_tolerance = -1);

  const std::vector<TextBox>& boxes() const { return boxes_; }
  int size() const { return static_cast<int>(boxes_.size()); }
  const TextBox& box(int i) const { return boxes_.at(i); }
  double median_height() const { return median_height_; }

  bool operator==(const BoxDocument& other) const {
    return boxes_ == other.boxes_;
  }

 private:
  std::vector<TextBox> boxes_;
  double median_height_ = 1;
};

// ---------------------------------------------------------------------------
// Documents, locations, regions

enum class DocKind { kTree, kBox };

std::string_view ToString(DocKind kind);

struct Document {
  std::string id;
  std::variant<TreeDocument, BoxDocument> content;

  DocKind kind() const {
    return std::holds_alternative<TreeDocument>(content) ? DocKind::kTree
                                                         : DocKind::kBox;
  }
  const TreeDocument& tree() const { return std::get<TreeDocument>(content); }
  const BoxDocument& boxes() const { return std::get<BoxDocument>(content); }
};

struct BoxIndex {
  int value = 0;

  auto operator<=>(const BoxIndex&) const = default;
  bool operator==(const BoxIndex&) const = default;
};

using Location = std::variant<TreePath, BoxIndex>;

std::string ToString(const Location& loc);

// All descendants of children [first, last] of `anchor`. The anchor kNoNode
// stands for a virtual parent of the root, so {kNoNode, 0, 0} is the whole
// document.
struct TreeRegion {
  NodeId anchor = kNoNode;
  int first = 0;
  int last = 0;

  bool operator==(const TreeRegion&) const = default;
};

// Boxes in the order a region program produced them (document order for
// enclosing regions). Never empty, never duplicated.
struct BoxRegion {
  std::vector<int> boxes;

  bool operator==(const BoxRegion&) const = default;
};

using Region = std::variant<TreeRegion, BoxRegion>;

// ---------------------------------------------------------------------------
// Data, locate, enclosing regions

// Throws InvalidLocationError when `loc` does not resolve in `doc`.
std::string DataAt(const Document& doc, const Location& loc);

// Deepest nodes whose data contains `landmark`, in pre-order.
std::vector<NodeId> LocateNodes(const TreeDocument& doc,
                                std::string_view landmark);
// Boxes whose text contains `landmark`, in document order.
std::vector<int> LocateBoxes(const BoxDocument& doc, std::string_view landmark);

std::vector<Location> Locate(const Document& doc, std::string_view landmark);

// Smallest region holding every node: the covering span of children of the
// nodes' lowest common ancestor, or the ancestor's own subtree when the
// ancestor is itself one of the nodes.
TreeRegion EnclosingRegion(const TreeDocument& doc,
                           std::span<const NodeId> nodes);
// Every box that intersects the bounding rectangle of the given boxes.
BoxRegion EnclosingRegion(const BoxDocument& doc, std::span<const int> boxes);

// Throws Error on an empty set and InvalidLocationError on bad locations.
Region EncRgn(const std::vector<Location>& locs, const Document& doc);

// Resolves a location to the node or box index it names.
NodeId ResolveNode(const TreeDocument& doc, const Location& loc);
int ResolveBox(const BoxDocument& doc, const Location& loc);

// Region helpers for trees.
bool IsValidRegion(const TreeDocument& doc, const TreeRegion& region);
// Top-level nodes of the region (the spanned siblings), in order.
std::vector<NodeId> RegionRoots(const TreeDocument& doc,
                                const TreeRegion& region);
// Pre-order range [begin, end) covered by the region.
std::pair<NodeId, NodeId> RegionRange(const TreeDocument& doc,
                                      const TreeRegion& region);
int RegionNodeCount(const TreeDocument& doc, const TreeRegion& region);
bool RegionContains(const TreeDocument& doc, const TreeRegion& region,
                    NodeId n);
bool RegionContains(const TreeDocument& doc, const TreeRegion& outer,
                    const TreeRegion& inner);

// Bounding rectangle of a set of boxes as {x0, y0, x1, y1}.
struct Rect {
  double x0 = 0, y0 = 0, x1 = 0, y1 = 0;
  double area() const { return (x1 - x0) * (y1 - y0); }
  bool Contains(const Rect& o) const {
    return x0 <= o.x0 && y0 <= o.y0 && o.x1 <= x1 && o.y1 <= y1;
  }
};
Rect BoundingRect(const BoxDocument& doc, std::span<const int> boxes);

// ---------------------------------------------------------------------------
// Annotations

enum class AggKind { kSingle, kOrderedList, kConcat };

struct Aggregation {
  AggKind kind = AggKind::kSingle;
  std::string separator;  // kConcat only

  bool operator==(const Aggregation&) const = default;
};

// A field value: one string for kSingle and kConcat, one per location for
// kOrderedList.
using FieldValue = std::vector<std::string>;

struct Annotation {
  std::vector<Location> locations;
  Aggregation agg;
  FieldValue values;

  // Throws Error when the shape of `values` does not fit `agg`.
  void Validate() const;
  // Expected text for each location, used to build value-program examples.
  // kConcat with several locations falls back to the data at each location.
  std::vector<std::string> PerLocationValues(const Document& doc) const;

  bool operator==(const Annotation&) const = default;
};

// field name -> annotation
using DocAnnotations = std::map<std::string, Annotation>;
// doc id -> field annotations
using AnnotationSet = std::map<std::string, DocAnnotations>;

// Combines per-region values. kSingle with more than one value is ambiguous
// and yields nullopt.
std::optional<FieldValue> Aggregate(const Aggregation& agg,
                                    std::vector<std::string> parts);

}  // namespace lrx

#endif  // LRX_DOCMODEL_H_
