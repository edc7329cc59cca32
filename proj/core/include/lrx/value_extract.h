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
// Value programs: pick value nodes inside a region with a node selector
// (trees) and cut the value out of their text with a text program. Box value
// programs run the text program over the region's box texts joined by
// spaces in path order.

#ifndef LRX_VALUE_EXTRACT_H_
#define LRX_VALUE_EXTRACT_H_

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "lrx/config.h"
#include "lrx/docmodel.h"
#include "lrx/pattern.h"

namespace lrx {

struct SelectorAtom {
  enum class Kind { kTag, kClass, kId, kAttrContains, kNthChild };

  Kind kind = Kind::kTag;
  std::string name;   // attribute name for kAttrContains
  std::string value;  // tag, class, id or substring
  int n = 0;          // kNthChild, 1-based

  auto operator<=>(const SelectorAtom&) const = default;
  bool operator==(const SelectorAtom&) const = default;
};

struct SelectorStep {
  enum class Axis { kChildren, kDescendants };

  Axis axis = Axis::kChildren;
  std::vector<SelectorAtom> atoms;  // conjunction; empty matches any node

  auto operator<=>(const SelectorStep&) const = default;
  bool operator==(const SelectorStep&) const = default;
};

struct NodeSelector {
  std::vector<SelectorStep> steps;

  int AtomCount() const;

  auto operator<=>(const NodeSelector&) const = default;
  bool operator==(const NodeSelector&) const = default;
};

// CSS-like rendering, e.g. "> td:nth-child(2)" or "tr.leg td".
std::string ToCss(const NodeSelector& s);

// Nodes of the region reached by the selector from the region anchor, in
// document order. nth-child of the region's top-level nodes counts from the
// first spanned sibling, so the result depends on the region alone.
std::vector<NodeId> EvalSelector(const NodeSelector& s, const TreeDocument& doc,
                                 const TreeRegion& region);

// A text position: the `side` of the k-th match of `token` (k < 0 counts from
// the right, -1 is the last match).
struct TextPosition {
  PatternToken token;
  int k = 1;
  bool after = false;

  auto operator<=>(const TextPosition&) const = default;
  bool operator==(const TextPosition&) const = default;
};

struct TextProgram {
  enum class Kind { kIdentity, kExtract, kConcat };

  Kind kind = Kind::kIdentity;
  TextPosition start, end;          // kExtract
  std::vector<TextProgram> parts;   // kConcat

  static TextProgram Identity() { return {}; }
  static TextProgram Extract(TextPosition s, TextPosition e) {
    return {Kind::kExtract, std::move(s), std::move(e), {}};
  }

  auto operator<=>(const TextProgram&) const = default;
  bool operator==(const TextProgram&) const = default;
};

std::string ToString(const TextPosition& p);
std::string ToString(const TextProgram& p);

// Extract returns the trimmed text between the two positions; nullopt when a
// position is missing, the positions cross, or the result is empty.
std::optional<std::string> ExecText(const TextProgram& p, std::string_view text);

struct TextExample {
  std::string text;
  std::string expected;
};

// Identity when every text equals its expected value, else the best-ranked
// Extract consistent with all examples. Throws SynthesisError.
TextProgram SynthesizeText(std::span<const TextExample> examples,
                           const std::vector<PatternToken>& extra_tokens = {});

struct TreeValueProgram {
  NodeSelector selector;
  TextProgram text;

  bool operator==(const TreeValueProgram&) const = default;
};

struct BoxValueProgram {
  TextProgram text;

  bool operator==(const BoxValueProgram&) const = default;
};

using ValueProgram = std::variant<TreeValueProgram, BoxValueProgram>;

std::string ToString(const ValueProgram& p);

// One string per selected node (trees) or one for the region (boxes);
// nullopt when nothing is selected or any text program fails.
std::optional<std::vector<std::string>> ExecValue(const ValueProgram& p,
                                                  const Document& doc,
                                                  const Region& region);

// Joined texts of a box region, in region order.
std::string RegionText(const BoxDocument& doc, const BoxRegion& region);

struct ValueExample {
  const Document* doc;
  Region region;
  std::vector<Location> targets;  // annotated locations inside the region
  std::vector<std::string> expected;  // trees: one per target; boxes: one
};

// Smallest selector (fewest atoms; tag/class/id before attribute tests
// before nth-child) whose result equals the targets on every example.
NodeSelector SynthesizeSelector(
    const std::vector<std::pair<const TreeDocument*, TreeRegion>>& regions,
    const std::vector<std::vector<NodeId>>& targets,
    const SelectorConfig& config = {});

ValueProgram SynthesizeValue(std::span<const ValueExample> examples,
                             const SelectorConfig& config = {});

}  // namespace lrx

#endif  // LRX_VALUE_EXTRACT_H_
