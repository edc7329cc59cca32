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
#include "lrx/roi.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <tuple>

#include "lrx/errors.h"
#include "lrx/text.h"

namespace lrx {
namespace {

// Smaller is nearer.
std::tuple<int, int, size_t> TreeNearness(const TreeDocument& doc, NodeId occ,
                                          NodeId v, size_t order) {
  return {-doc.depth(doc.Lca(occ, v)), std::abs(occ - v), order};
}

std::tuple<double, size_t> BoxNearness(const BoxDocument& doc, int occ, int v,
                                       size_t order) {
  const TextBox& a = doc.box(occ);
  const TextBox& b = doc.box(v);
  return {std::hypot(a.cx() - b.cx(), a.cy() - b.cy()), order};
}

}  // namespace

std::vector<RoiInstance> AssignInstances(
    const Document& doc, const Annotation& ann,
    const std::vector<Location>& occurrences) {
  if (occurrences.empty()) return {};
  const std::vector<std::string> values = ann.PerLocationValues(doc);
  std::vector<std::vector<size_t>> assigned(occurrences.size());
  for (size_t i = 0; i < ann.locations.size(); ++i) {
    size_t best = 0;
    if (doc.kind() == DocKind::kTree) {
      const TreeDocument& t = doc.tree();
      const NodeId v = ResolveNode(t, ann.locations[i]);
      auto key = TreeNearness(t, ResolveNode(t, occurrences[0]), v, 0);
      for (size_t o = 1; o < occurrences.size(); ++o) {
        auto k = TreeNearness(t, ResolveNode(t, occurrences[o]), v, o);
        if (k < key) {
          key = k;
          best = o;
        }
      }
    } else {
      const BoxDocument& b = doc.boxes();
      const int v = ResolveBox(b, ann.locations[i]);
      auto key = BoxNearness(b, ResolveBox(b, occurrences[0]), v, 0);
      for (size_t o = 1; o < occurrences.size(); ++o) {
        auto k = BoxNearness(b, ResolveBox(b, occurrences[o]), v, o);
        if (k < key) {
          key = k;
          best = o;
        }
      }
    }
    assigned[best].push_back(i);
  }
  std::vector<RoiInstance> out;
  for (size_t o = 0; o < occurrences.size(); ++o) {
    if (assigned[o].empty()) continue;
    std::vector<std::pair<Location, std::string>> locs;
    for (size_t i : assigned[o]) {
      locs.emplace_back(ann.locations[i], i < values.size() ? values[i] : "");
    }
    std::stable_sort(locs.begin(), locs.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    RoiInstance inst;
    inst.landmark = occurrences[o];
    for (auto& [l, v] : locs) {
      inst.locations.push_back(std::move(l));
      inst.values.push_back(std::move(v));
    }
    out.push_back(std::move(inst));
  }
  return out;
}

Region InstanceRegion(const Document& doc, const RoiInstance& inst) {
  std::vector<Location> all = inst.locations;
  all.push_back(inst.landmark);
  return EncRgn(all, doc);
}

std::string JoinedValue(const RoiInstance& inst, const Aggregation& agg) {
  if (inst.values.size() == 1) return inst.values[0];
  return Join(inst.values, agg.kind == AggKind::kConcat ? agg.separator : " ");
}

RoiFeatures InstanceFeatures(const Document& doc, const RoiInstance& inst) {
  RoiFeatures f;
  if (inst.locations.empty()) return f;
  const Region region = InstanceRegion(doc, inst);
  if (doc.kind() == DocKind::kTree) {
    const TreeDocument& t = doc.tree();
    const NodeId l = ResolveNode(t, inst.landmark);
    for (const auto& loc : inst.locations) {
      const NodeId v = ResolveNode(t, loc);
      const NodeId a = t.Lca(l, v);
      const int path_nodes = t.depth(l) + t.depth(v) - 2 * t.depth(a) + 1;
      f.distance += path_nodes + std::abs(l - v);
    }
    f.distance /= static_cast<double>(inst.locations.size());
    f.size = RegionNodeCount(t, std::get<TreeRegion>(region));
    return f;
  }
  const BoxDocument& b = doc.boxes();
  const double h = b.median_height();
  const TextBox& lb = b.box(ResolveBox(b, inst.landmark));
  for (const auto& loc : inst.locations) {
    const TextBox& vb = b.box(ResolveBox(b, loc));
    f.distance += std::hypot(lb.cx() - vb.cx(), lb.cy() - vb.cy()) / h;
  }
  f.distance /= static_cast<double>(inst.locations.size());
  const auto& boxes = std::get<BoxRegion>(region).boxes;
  f.size = BoundingRect(b, boxes).area() / (h * h);
  return f;
}

}  // namespace lrx
