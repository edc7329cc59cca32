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
// Box region programs. A path starts at the landmark box and grows by
// motions:
//
//   Absolute(dir, k)                 append the next k boxes in dir
//   Relative(dir, pattern, incl)     append boxes in dir until one matches
//                                    pattern; that box is kept iff incl
//
// Each step moves to the nearest not-yet-visited neighbor of the box reached
// last. A disjunction runs its paths in order and keeps the first non-null
// region.

#ifndef LRX_REGION_BOX_H_
#define LRX_REGION_BOX_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lrx/box_geometry.h"
#include "lrx/config.h"
#include "lrx/docmodel.h"
#include "lrx/pattern.h"

namespace lrx {

struct Motion {
  enum class Kind { kAbsolute, kRelative };

  Kind kind = Kind::kAbsolute;
  Direction dir = Direction::kRight;
  int k = 1;             // kAbsolute
  PatternToken pattern;  // kRelative
  bool inclusive = false;

  static Motion Absolute(Direction d, int k) {
    return {Kind::kAbsolute, d, k, {}, false};
  }
  static Motion Relative(Direction d, PatternToken p, bool inclusive) {
    return {Kind::kRelative, d, 0, std::move(p), inclusive};
  }

  auto operator<=>(const Motion&) const = default;
  bool operator==(const Motion&) const = default;
};

struct PathProgram {
  std::vector<Motion> motions;

  auto operator<=>(const PathProgram&) const = default;
  bool operator==(const PathProgram&) const = default;
};

struct DisjunctProgram {
  std::vector<PathProgram> paths;

  bool operator==(const DisjunctProgram&) const = default;
};

std::string ToString(const Motion& m);
std::string ToString(const PathProgram& p);
std::string ToString(const DisjunctProgram& p);

// Precomputed neighbor lists of one document; the motions only ever ask for
// these.
class NeighborTable {
 public:
  NeighborTable(const BoxDocument& doc, double min_overlap);
  const std::vector<int>& Get(int box, Direction dir) const {
    return table_[static_cast<size_t>(box) * 4 + static_cast<size_t>(dir)];
  }
  const BoxDocument& doc() const { return *doc_; }

 private:
  const BoxDocument* doc_;
  std::vector<std::vector<int>> table_;
};

std::optional<BoxRegion> ExecPath(const BoxDocument& doc, int landmark,
                                  const PathProgram& prog,
                                  double min_overlap = 0.25);
std::optional<BoxRegion> ExecPath(const NeighborTable& table, int landmark,
                                  const PathProgram& prog);
std::optional<BoxRegion> ExecDisjunct(const NeighborTable& table, int landmark,
                                      const DisjunctProgram& prog);

// A landmark occurrence and the annotated boxes its region must hold.
struct PathExample {
  const NeighborTable* table;
  int landmark;
  std::vector<int> annotated;
};

// The region holds every annotated box and ends on one.
bool PathCorrect(const BoxRegion& region, const std::vector<int>& annotated);
bool PathCorrect(const PathExample& ex, const PathProgram& prog);

// All paths of up to `max_motions` motions correct on every example of the
// subset, ranked by (total region size, motion count, text); at most
// `keep_per_subset`.
std::vector<PathProgram> EnumeratePaths(std::span<const PathExample> subset,
                                        const std::vector<PatternToken>& patterns,
                                        const EnumerationConfig& config);

// Outcome of one candidate path on one example.
enum class PathOutcome { kNull, kCorrect, kWrong };

using OutcomeMatrix = std::vector<std::vector<PathOutcome>>;  // [candidate][example]

// Examples covered when `order` runs first-non-null.
int OrderedCoverage(const OutcomeMatrix& outcomes, const std::vector<int>& order);

// Greedy cover under first-non-null semantics: inserts, at its best position,
// the candidate that raises coverage most (ties: smaller size, then lower
// index) until nothing helps, then drops picks that decide nothing.
std::vector<int> GreedyCover(const OutcomeMatrix& outcomes, const std::vector<int>& sizes);

struct DisjunctionResult {
  DisjunctProgram program;
  std::vector<bool> covered;  // per example, under first-non-null semantics
  int covered_count = 0;
};

DisjunctionResult SelectDisjunction(const std::vector<PathProgram>& candidates,
                                    std::span<const PathExample> examples);

// Subsets of the examples (each single one plus `random_subsets` random
// pairs and triples), enumeration on each, then selection.
DisjunctionResult SynthesizeBoxRegion(std::span<const PathExample> examples,
                                      const std::vector<PatternToken>& patterns,
                                      const EnumerationConfig& config,
                                      std::uint64_t seed);

}  // namespace lrx

#endif  // LRX_REGION_BOX_H_
