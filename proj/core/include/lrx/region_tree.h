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
// Tree region programs: climb `parent_hops` ancestors from the landmark node
// to n1, then take the siblings of n1 from `left` before it to `right` after
// it, with all their descendants.

#ifndef LRX_REGION_TREE_H_
#define LRX_REGION_TREE_H_

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lrx/docmodel.h"

namespace lrx {

struct HopsProgram {
  int parent_hops = 0;
  int left = 0;
  int right = 0;

  auto operator<=>(const HopsProgram&) const = default;
  bool operator==(const HopsProgram&) const = default;
};

std::string ToString(const HopsProgram& p);

// Minimal program for one document, from the lowest common ancestor of the
// landmark and the value nodes.
HopsProgram LearnHops(const TreeDocument& doc, NodeId landmark,
                      std::span<const NodeId> values);

// Largest parent_hops; sibling offsets are the largest among the programs at
// that height (lower programs sit entirely inside n1's subtree there).
HopsProgram ReconcileHops(std::span<const HopsProgram> programs);

struct HopsExample {
  const TreeDocument* doc;
  NodeId landmark;
  std::vector<NodeId> values;
};

// Same result as ReconcileHops over the learned programs, computed by
// re-deriving each document's sibling offsets at the common height.
HopsProgram ReconcileHopsOnDocs(std::span<const HopsExample> examples);

// nullopt when the climb passes the root or the span leaves n1's siblings.
std::optional<TreeRegion> ExecHops(const TreeDocument& doc, NodeId landmark,
                                   const HopsProgram& prog);

}  // namespace lrx

#endif  // LRX_REGION_TREE_H_
