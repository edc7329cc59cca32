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
#include "lrx/blueprint.h"

#include <algorithm>
#include <map>

#include "lrx/box_geometry.h"
#include "lrx/errors.h"
#include "lrx/text.h"

namespace lrx {
namespace {

int TokenCount(const std::string& s) {
  return static_cast<int>(SplitWhitespace(s).size());
}

std::string ToString(const NeighborClass& n) {
  switch (n.kind) {
    case NeighborKind::kAbsent:
      return "-";
    case NeighborKind::kVariable:
      return "*";
    case NeighborKind::kFrequent:
      return "\"" + n.ngram + "\"";
  }
  return "?";
}

NeighborClass Classify(const BoxDocument& doc, int box, Direction dir,
                       const CommonValueIndex& idx, int max_n, double radius) {
  const std::optional<int> next = AdjacentBox(doc, box, dir, radius);
  if (!next) return {NeighborKind::kAbsent, {}};
  std::string ngram = idx.LongestIn(doc.box(*next).text, max_n);
  if (ngram.empty()) return {NeighborKind::kVariable, {}};
  return {NeighborKind::kFrequent, std::move(ngram)};
}

}  // namespace

std::string ToString(const Blueprint& bp) {
  std::string out;
  if (const auto* t = std::get_if<TreeBlueprint>(&bp)) {
    out = "{";
    for (const auto& p : t->paths) {
      if (out.size() > 1) out += ", ";
      out += p;
    }
    return out + "}";
  }
  out = "[";
  for (const auto& s : std::get<BoxBlueprint>(bp).summaries) {
    if (out.size() > 1) out += ", ";
    out += "\"" + s.ngram + "\"(T:" + ToString(s.top) + " L:" +
           ToString(s.left) + " R:" + ToString(s.right) +
           " B:" + ToString(s.bottom) + ")";
  }
  return out + "]";
}

std::string CommonValueIndex::LongestIn(const std::string& text,
                                        int max_n) const {
  std::string best;
  int best_len = 0;
  for (const auto& g : TokenNGrams(text, max_n)) {
    if (!Contains(g)) continue;
    const int len = TokenCount(g);
    if (len > best_len || (len == best_len && g < best)) {
      best = g;
      best_len = len;
    }
  }
  return best;
}

std::set<std::string> NodeValues(const TreeDocument& doc) {
  std::set<std::string> out;
  for (NodeId id = 0; id < doc.size(); ++id) {
    if (!doc.data(id).empty()) out.insert(doc.data(id));
  }
  return out;
}

CommonValueIndex CommonValues(const std::vector<const TreeDocument*>& docs) {
  CommonValueIndex idx;
  if (docs.empty()) return idx;
  idx.values = NodeValues(*docs[0]);
  for (size_t i = 1; i < docs.size() && !idx.values.empty(); ++i) {
    const std::set<std::string> other = NodeValues(*docs[i]);
    std::set<std::string> kept;
    std::set_intersection(idx.values.begin(), idx.values.end(), other.begin(),
                          other.end(), std::inserter(kept, kept.end()));
    idx.values = std::move(kept);
  }
  return idx;
}

CommonValueIndex FrequentNGrams(const std::vector<const BoxDocument*>& docs,
                                int max_n, bool require_all) {
  std::map<std::string, int> counts;
  for (const BoxDocument* doc : docs) {
    std::set<std::string> seen;
    for (const auto& b : doc->boxes()) {
      for (auto& g : TokenNGrams(b.text, max_n)) seen.insert(std::move(g));
    }
    for (const auto& g : seen) ++counts[g];
  }
  std::vector<std::pair<std::string, int>> ranked(counts.begin(), counts.end());
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  ranked.resize((ranked.size() + 1) / 2);
  CommonValueIndex idx;
  for (const auto& [g, c] : ranked) {
    if (!require_all || c == static_cast<int>(docs.size())) idx.values.insert(g);
  }
  idx.ranked = std::move(ranked);
  return idx;
}

TreeBlueprint BlueprintTree(const TreeRegion& region, const TreeDocument& doc,
                            const CommonValueIndex& idx) {
  TreeBlueprint bp;
  for (NodeId top : RegionRoots(doc, region)) {
    for (NodeId n = top; n < doc.subtree_end(top); ++n) {
      if (!idx.Contains(doc.data(n))) continue;
      std::vector<const std::string*> tags;
      for (NodeId a = n;; a = doc.parent(a)) {
        tags.push_back(&doc.node(a).tag);
        if (a == top) break;
      }
      std::string path;
      for (auto it = tags.rbegin(); it != tags.rend(); ++it) path += "/" + **it;
      bp.paths.insert(std::move(path));
    }
  }
  return bp;
}

BoxSummary SummarizeBox(const BoxDocument& doc, int box,
                        const CommonValueIndex& idx, int max_n, double radius) {
  BoxSummary s;
  s.ngram = idx.LongestIn(doc.box(box).text, max_n);
  s.top = Classify(doc, box, Direction::kTop, idx, max_n, radius);
  s.left = Classify(doc, box, Direction::kLeft, idx, max_n, radius);
  s.right = Classify(doc, box, Direction::kRight, idx, max_n, radius);
  s.bottom = Classify(doc, box, Direction::kBottom, idx, max_n, radius);
  return s;
}

BoxBlueprint BlueprintBox(const BoxRegion& region, const BoxDocument& doc,
                          const CommonValueIndex& idx, int max_n,
                          double radius) {
  std::vector<int> ordered = region.boxes;
  std::sort(ordered.begin(), ordered.end());
  BoxBlueprint bp;
  for (int b : ordered) {
    if (idx.LongestIn(doc.box(b).text, max_n).empty()) continue;
    bp.summaries.push_back(SummarizeBox(doc, b, idx, max_n, radius));
  }
  return bp;
}

Blueprint ComputeBlueprint(const Region& region, const Document& doc,
                           const CommonValueIndex& idx,
                           const BlueprintOptions& options) {
  if (doc.kind() == DocKind::kTree) {
    return BlueprintTree(std::get<TreeRegion>(region), doc.tree(), idx);
  }
  return BlueprintBox(std::get<BoxRegion>(region), doc.boxes(), idx,
                      options.max_n, options.radius);
}

Blueprint DocumentBlueprint(const Document& doc, const CommonValueIndex& idx,
                            const BlueprintOptions& options) {
  if (doc.kind() == DocKind::kTree) {
    return BlueprintTree(TreeRegion{}, doc.tree(), idx);
  }
  BoxRegion all;
  for (int i = 0; i < doc.boxes().size(); ++i) all.boxes.push_back(i);
  return BlueprintBox(all, doc.boxes(), idx, options.max_n, options.radius);
}

double Delta(const TreeBlueprint& a, const TreeBlueprint& b) {
  if (a.paths.empty() && b.paths.empty()) return 0;
  size_t common = 0;
  for (const auto& p : a.paths) common += b.paths.count(p);
  const size_t uni = a.paths.size() + b.paths.size() - common;
  return 1.0 - static_cast<double>(common) / static_cast<double>(uni);
}

double Delta(const BoxBlueprint& a, const BoxBlueprint& b) {
  const auto& x = a.summaries;
  const auto& y = b.summaries;
  if (x.empty() && y.empty()) return 0;
  std::vector<size_t> prev(y.size() + 1);
  std::vector<size_t> cur(y.size() + 1);
  for (size_t j = 0; j <= y.size(); ++j) prev[j] = j;
  for (size_t i = 1; i <= x.size(); ++i) {
    cur[0] = i;
    for (size_t j = 1; j <= y.size(); ++j) {
      const size_t sub = prev[j - 1] + (x[i - 1] == y[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  const double lev = static_cast<double>(prev[y.size()]);
  return 2 * lev / (static_cast<double>(x.size() + y.size()) + lev);
}

double Delta(const Blueprint& a, const Blueprint& b) {
  if (a.index() != b.index()) {
    throw Error("blueprint distance between a tree and a box blueprint");
  }
  if (const auto* t = std::get_if<TreeBlueprint>(&a)) {
    return Delta(*t, std::get<TreeBlueprint>(b));
  }
  return Delta(std::get<BoxBlueprint>(a), std::get<BoxBlueprint>(b));
}

Blueprint ModeBlueprint(const std::vector<Blueprint>& bps) {
  if (bps.empty()) throw Error("mode of an empty blueprint list");
  size_t best = 0;
  int best_count = 0;
  for (size_t i = 0; i < bps.size(); ++i) {
    int count = 0;
    for (const auto& b : bps) count += b == bps[i];
    if (count > best_count) {
      best = i;
      best_count = count;
    }
  }
  return bps[best];
}

}  // namespace lrx
