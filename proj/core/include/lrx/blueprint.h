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
// Blueprints: structural fingerprints of regions that ignore variable text.
//
// A tree blueprint is the set of index-free tag paths (from the region's top
// level) of region nodes whose data is a common value. A box blueprint is the
// document-ordered list of BoxSummary records of the region's boxes that hold
// a frequent n-gram.

#ifndef LRX_BLUEPRINT_H_
#define LRX_BLUEPRINT_H_

#include <compare>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "lrx/docmodel.h"

namespace lrx {

struct TreeBlueprint {
  std::set<std::string> paths;

  auto operator<=>(const TreeBlueprint&) const = default;
  bool operator==(const TreeBlueprint&) const = default;
};

enum class NeighborKind { kAbsent, kFrequent, kVariable };

struct NeighborClass {
  NeighborKind kind = NeighborKind::kAbsent;
  std::string ngram;  // kFrequent only

  auto operator<=>(const NeighborClass&) const = default;
  bool operator==(const NeighborClass&) const = default;
};

struct BoxSummary {
  std::string ngram;
  NeighborClass top, left, right, bottom;

  auto operator<=>(const BoxSummary&) const = default;
  bool operator==(const BoxSummary&) const = default;
};

struct BoxBlueprint {
  std::vector<BoxSummary> summaries;

  auto operator<=>(const BoxBlueprint&) const = default;
  bool operator==(const BoxBlueprint&) const = default;
};

using Blueprint = std::variant<TreeBlueprint, BoxBlueprint>;

std::string ToString(const Blueprint& bp);

// The vocabulary a blueprint is computed against. For trees, `values` holds
// node data common to every document. For boxes, `ranked` lists the retained
// n-grams with their document frequency and `values` holds the ones that
// count as frequent.
struct CommonValueIndex {
  std::set<std::string> values;
  std::vector<std::pair<std::string, int>> ranked;

  bool Contains(const std::string& s) const { return values.count(s) > 0; }
  // Longest token n-gram of `text` in `values` (up to `max_n` tokens); ties
  // by lexicographic order. Empty when none.
  std::string LongestIn(const std::string& text, int max_n) const;

  bool operator==(const CommonValueIndex&) const = default;
};

// All non-empty node data values of the document.
std::set<std::string> NodeValues(const TreeDocument& doc);

CommonValueIndex CommonValues(const std::vector<const TreeDocument*>& docs);

// Token n-grams (n <= max_n) of box texts ranked by document frequency, ties
// lexicographic; the top ceil(distinct / 2) are retained. With
// `require_all`, only retained n-grams present in every document count as
// frequent.
CommonValueIndex FrequentNGrams(const std::vector<const BoxDocument*>& docs,
                                int max_n, bool require_all = false);

TreeBlueprint BlueprintTree(const TreeRegion& region, const TreeDocument& doc,
                            const CommonValueIndex& idx);
BoxBlueprint BlueprintBox(const BoxRegion& region, const BoxDocument& doc,
                          const CommonValueIndex& idx, int max_n = 5,
                          double radius = 3.0);
BoxSummary SummarizeBox(const BoxDocument& doc, int box,
                        const CommonValueIndex& idx, int max_n = 5,
                        double radius = 3.0);

struct BlueprintOptions {
  int max_n = 5;
  double radius = 3.0;
};

Blueprint ComputeBlueprint(const Region& region, const Document& doc,
                           const CommonValueIndex& idx,
                           const BlueprintOptions& options = {});
// Whole-document blueprint.
Blueprint DocumentBlueprint(const Document& doc, const CommonValueIndex& idx,
                            const BlueprintOptions& options = {});

// Jaccard distance for trees (0 for two empty sets), normalized edit distance
// 2L / (|a| + |b| + L) for box summaries. Throws Error on mixed variants.
double Delta(const Blueprint& a, const Blueprint& b);
double Delta(const TreeBlueprint& a, const TreeBlueprint& b);
double Delta(const BoxBlueprint& a, const BoxBlueprint& b);

// Most frequent blueprint, ties by first occurrence.
Blueprint ModeBlueprint(const std::vector<Blueprint>& bps);

}  // namespace lrx

#endif  // LRX_BLUEPRINT_H_
