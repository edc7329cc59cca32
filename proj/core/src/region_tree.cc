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
#include "lrx/region_tree.h"

#include <algorithm>

#include "lrx/errors.h"

namespace lrx {
namespace {

// Sibling offsets of the children of parent(n1) that hold `values`, relative
// to n1. Values inside n1's subtree count as offset 0.
HopsProgram OffsetsAt(const TreeDocument& doc, NodeId n1, int parent_hops,
                      std::span<const NodeId> values) {
  HopsProgram p{parent_hops, 0, 0};
  const NodeId parent = doc.parent(n1);
  for (NodeId v : values) {
    if (doc.IsAncestorOrSelf(n1, v)) continue;
    if (parent == kNoNode || !doc.IsAncestorOrSelf(parent, v)) {
      throw Error("value node lies outside the climbed subtree");
    }
    const NodeId c = doc.Ancestor(v, doc.depth(v) - doc.depth(parent) - 1);
    const int off = doc.child_index(c) - doc.child_index(n1);
    p.left = std::max(p.left, -off);
    p.right = std::max(p.right, off);
  }
  return p;
}

}  // namespace

std::string ToString(const HopsProgram& p) {
  return "hops(parent=" + std::to_string(p.parent_hops) +
         ", left=" + std::to_string(p.left) +
         ", right=" + std::to_string(p.right) + ")";
}

HopsProgram LearnHops(const TreeDocument& doc, NodeId landmark,
                      std::span<const NodeId> values) {
  NodeId n = landmark;
  for (NodeId v : values) n = doc.Lca(n, v);
  if (n == landmark) return {};
  const int dl = doc.depth(landmark);
  if (std::find(values.begin(), values.end(), n) != values.end()) {
    // A value node encloses the landmark: keep the value's whole subtree.
    return {dl - doc.depth(n), 0, 0};
  }
  const int hops = dl - doc.depth(n) - 1;
  return OffsetsAt(doc, doc.Ancestor(landmark, hops), hops, values);
}

HopsProgram ReconcileHops(std::span<const HopsProgram> programs) {
  if (programs.empty()) throw Error("reconciling an empty program list");
  HopsProgram out;
  for (const auto& p : programs) out.parent_hops = std::max(out.parent_hops, p.parent_hops);
  for (const auto& p : programs) {
    if (p.parent_hops != out.parent_hops) continue;
    out.left = std::max(out.left, p.left);
    out.right = std::max(out.right, p.right);
  }
  return out;
}

HopsProgram ReconcileHopsOnDocs(std::span<const HopsExample> examples) {
  if (examples.empty()) throw Error("reconciling an empty example list");
  int hops = 0;
  int lowest = examples[0].doc->depth(examples[0].landmark);
  for (const auto& e : examples) {
    hops = std::max(hops, LearnHops(*e.doc, e.landmark, e.values).parent_hops);
    lowest = std::min(lowest, e.doc->depth(e.landmark));
  }
  // Widest offsets at the tallest height; climb further while some document
  // lacks the siblings another one needs.
  for (; hops <= lowest; ++hops) {
    HopsProgram out{hops, 0, 0};
    for (const auto& e : examples) {
      const HopsProgram p =
          OffsetsAt(*e.doc, e.doc->Ancestor(e.landmark, hops), hops, e.values);
      out.left = std::max(out.left, p.left);
      out.right = std::max(out.right, p.right);
    }
    bool runs = true;
    for (const auto& e : examples) {
      runs = runs && ExecHops(*e.doc, e.landmark, out).has_value();
    }
    if (runs) return out;
  }
  throw Error("no hops program covers every training document");
}

std::optional<TreeRegion> ExecHops(const TreeDocument& doc, NodeId landmark,
                                   const HopsProgram& prog) {
  if (prog.parent_hops < 0 || prog.left < 0 || prog.right < 0) return std::nullopt;
  if (prog.parent_hops > doc.depth(landmark)) return std::nullopt;
  const NodeId n1 = doc.Ancestor(landmark, prog.parent_hops);
  const NodeId parent = doc.parent(n1);
  // The root has no siblings; its span is the whole document.
  if (parent == kNoNode) return TreeRegion{kNoNode, 0, 0};
  const int idx = doc.child_index(n1);
  const int n = static_cast<int>(doc.children(parent).size());
  if (idx - prog.left < 0 || idx + prog.right >= n) return std::nullopt;
  return TreeRegion{parent, idx - prog.left, idx + prog.right};
}

}  // namespace lrx
