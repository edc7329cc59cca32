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
// Brute-force oracles shared by the unit tests and the acceptance suite.

#ifndef LRX_TESTS_ORACLES_H_
#define LRX_TESTS_ORACLES_H_

#include <algorithm>
#include <vector>

#include "lrx/region_box.h"
#include "lrx/region_tree.h"
#include "test_util.h"

namespace lrx::testing {

// One training document: a random tree, a landmark node and value nodes.
struct Example {
  TreeDocument doc;
  NodeId landmark;
  std::vector<NodeId> values;
};

inline Example RandomExample(Rng& r) {
  Example e{TreeDocument(RandomTree(r, 60, {"a", "b"})), 0, {}};
  e.landmark = Uniform(r, 0, e.doc.size() - 1);
  const int k = Uniform(r, 1, 3);
  for (int i = 0; i < k; ++i) e.values.push_back(Uniform(r, 0, e.doc.size() - 1));
  return e;
}

inline bool Covers(const std::vector<Example>& ex, const HopsProgram& p) {
  for (const auto& e : ex) {
    const auto reg = ExecHops(e.doc, e.landmark, p);
    if (!reg) return false;
    for (NodeId n : e.values) {
      if (!RegionContains(e.doc, *reg, n)) return false;
    }
  }
  return true;
}

// Exhaustive search; offsets beyond the widest sibling list never run.
inline bool AnyProgramCovers(const std::vector<Example>& ex) {
  int width = 1;
  for (const auto& e : ex) {
    for (NodeId n = 0; n < e.doc.size(); ++n) {
      width = std::max(width, static_cast<int>(e.doc.children(n).size()));
    }
  }
  for (int h = 0; h <= ex[0].doc.depth(ex[0].landmark); ++h) {
    for (int l = 0; l < width; ++l) {
      for (int r = 0; r < width; ++r) {
        if (Covers(ex, {h, l, r})) return true;
      }
    }
  }
  return false;
}

// Exact optimum of first-non-null coverage: the examples a prefix decides
// depend only on the set of candidates used, so a subset DP suffices.
inline int OptimalCoverage(const OutcomeMatrix& m) {
  const size_t n = m.size();
  const size_t units = m.empty() ? 0 : m[0].size();
  std::vector<int> best(size_t{1} << n, -1);
  best[0] = 0;
  int out = 0;
  for (size_t s = 0; s < best.size(); ++s) {
    if (best[s] < 0) continue;
    out = std::max(out, best[s]);
    for (size_t c = 0; c < n; ++c) {
      if (s >> c & 1) continue;
      int gain = 0;
      for (size_t u = 0; u < units; ++u) {
        bool decided = false;
        for (size_t d = 0; d < n && !decided; ++d) {
          decided = (s >> d & 1) && m[d][u] != PathOutcome::kNull;
        }
        gain += !decided && m[c][u] == PathOutcome::kCorrect;
      }
      const size_t t = s | size_t{1} << c;
      best[t] = std::max(best[t], best[s] + gain);
    }
  }
  return out;
}

}  // namespace lrx::testing

#endif  // LRX_TESTS_ORACLES_H_
