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
// Helpers shared by the unit tests: random trees, tiny documents and
// brute-force region oracles.

#ifndef LRX_TESTS_TEST_UTIL_H_
#define LRX_TESTS_TEST_UTIL_H_

#include <random>
#include <string>
#include <vector>

#include "lrx/cluster.h"
#include "lrx/corpus.h"
#include "lrx/docmodel.h"
#include "lrx/errors.h"
#include "lrx/ingest.h"

namespace lrx::testing {

using Rng = std::mt19937_64;

inline int Uniform(Rng& r, int lo, int hi) {
  return lo + static_cast<int>(r() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline Document TreeDoc(std::string id, std::string_view html) {
  return {std::move(id), IngestHtml(html)};
}

inline Document BoxDoc(std::string id, std::vector<TextBox> boxes) {
  return {std::move(id), BoxDocument(std::move(boxes))};
}

inline TextBox B(std::string text, double x, double y, double w = 0,
                 double h = 20) {
  if (w == 0) w = 9.0 * static_cast<double>(text.size());
  return {std::move(text), x, y, w, h};
}

// Random tree of at most `max_nodes` nodes; tags from a small set, own text
// drawn from `words` (empty allowed).
inline TreeNode RandomTree(Rng& r, int max_nodes,
                           const std::vector<std::string>& words) {
  static const std::vector<std::string> kTags = {"div", "td", "tr", "span", "p"};
  const int n = Uniform(r, 1, max_nodes);
  std::vector<TreeNode> nodes(n);
  std::vector<int> parent(n, -1);
  for (int i = 0; i < n; ++i) {
    nodes[i].tag = kTags[r() % kTags.size()];
    if (!words.empty() && r() % 3 != 0) nodes[i].own_text = words[r() % words.size()];
    if (i > 0) parent[i] = Uniform(r, 0, i - 1);
  }
  // Attach children bottom-up so every node is moved after its own subtree
  // is complete.
  for (int i = n - 1; i > 0; --i) {
    nodes[parent[i]].children.insert(nodes[parent[i]].children.begin(),
                                     std::move(nodes[i]));
  }
  return std::move(nodes[0]);
}

// Every valid region of a tree, the virtual root included.
inline std::vector<TreeRegion> AllRegions(const TreeDocument& doc) {
  std::vector<TreeRegion> out = {{kNoNode, 0, 0}};
  for (NodeId a = 0; a < doc.size(); ++a) {
    const int k = static_cast<int>(doc.children(a).size());
    for (int i = 0; i < k; ++i) {
      for (int j = i; j < k; ++j) out.push_back({a, i, j});
    }
  }
  return out;
}

// Smallest region (by node count) holding every node; brute force.
inline TreeRegion MinimalRegionOracle(const TreeDocument& doc,
                                      const std::vector<NodeId>& nodes) {
  TreeRegion best{kNoNode, 0, 0};
  int best_count = doc.size() + 1;
  for (const auto& reg : AllRegions(doc)) {
    bool all = true;
    for (NodeId n : nodes) all = all && RegionContains(doc, reg, n);
    if (!all) continue;
    const int c = RegionNodeCount(doc, reg);
    if (c < best_count) {
      best_count = c;
      best = reg;
    }
  }
  return best;
}

// Annotation of the first node whose own text is `value`.
inline Annotation AnnotateText(const Document& doc, const std::string& value) {
  const TreeDocument& t = doc.tree();
  for (NodeId n = 0; n < t.size(); ++n) {
    if (t.node(n).own_text == value) return {{t.PathOf(n)}, {}, {value}};
  }
  throw Error(value + " not in " + doc.id);
}

struct Examples {
  std::vector<Document> docs;
  std::vector<Annotation> anns;

  FieldExamples View() const {
    FieldExamples ex;
    for (size_t i = 0; i < docs.size(); ++i) {
      ex.docs.push_back(&docs[i]);
      ex.annotations.push_back(&anns[i]);
    }
    return ex;
  }
};

inline Examples FromCorpus(const Corpus& c, const std::string& field) {
  Examples e;
  for (const auto& d : c.docs) {
    auto it = c.annotations.find(d.id);
    if (it == c.annotations.end() || !it->second.count(field)) continue;
    e.docs.push_back(d);
    e.anns.push_back(it->second.at(field));
  }
  return e;
}

}  // namespace lrx::testing

#endif  // LRX_TESTS_TEST_UTIL_H_
