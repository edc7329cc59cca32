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
#include "lrx/region_box.h"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <set>
#include <tuple>

#include "lrx/errors.h"

namespace lrx {
namespace {

struct Walk {
  std::vector<int> visited;
  int cur = 0;
};

bool Visited(const Walk& w, int b) {
  return std::find(w.visited.begin(), w.visited.end(), b) != w.visited.end();
}

int NextUnvisited(const NeighborTable& t, const Walk& w, int from,
                  Direction dir) {
  for (int b : t.Get(from, dir)) {
    if (!Visited(w, b)) return b;
  }
  return -1;
}

// Applies one motion; false means the motion failed (null region) or the walk
// grew past `cap` boxes.
bool Apply(const NeighborTable& t, const Motion& m, Walk& w,
           size_t cap = std::numeric_limits<size_t>::max()) {
  if (m.kind == Motion::Kind::kAbsolute) {
    for (int i = 0; i < m.k; ++i) {
      const int n = NextUnvisited(t, w, w.cur, m.dir);
      if (n < 0 || w.visited.size() >= cap) return false;
      w.visited.push_back(n);
      w.cur = n;
    }
    return true;
  }
  while (true) {
    const int n = NextUnvisited(t, w, w.cur, m.dir);
    if (n < 0) return false;
    const bool hit = m.pattern.MatchesWhole(t.doc().box(n).text);
    if (hit && !m.inclusive) return true;
    if (w.visited.size() >= cap) return false;
    w.visited.push_back(n);
    w.cur = n;
    if (hit) return true;
  }
}

std::vector<Motion> AllMotions(const std::vector<PatternToken>& patterns,
                               const EnumerationConfig& config) {
  std::vector<Motion> out;
  for (Direction d : kAllDirections) {
    for (int k = 1; k <= config.max_k; ++k) out.push_back(Motion::Absolute(d, k));
    for (const auto& p : patterns) {
      if (p.kind == TokenKind::kStartOfLine || p.kind == TokenKind::kEndOfLine) {
        continue;
      }
      out.push_back(Motion::Relative(d, p, false));
      out.push_back(Motion::Relative(d, p, true));
    }
  }
  return out;
}

bool WalkCorrect(const Walk& w, const std::vector<int>& annotated) {
  return PathCorrect(BoxRegion{w.visited}, annotated);
}

}  // namespace

std::string ToString(const Motion& m) {
  if (m.kind == Motion::Kind::kAbsolute) {
    return "Abs(" + std::string(ToString(m.dir)) + "," + std::to_string(m.k) +
           ")";
  }
  return "Rel(" + std::string(ToString(m.dir)) + "," + m.pattern.Name() + "," +
         (m.inclusive ? "incl" : "excl") + ")";
}

std::string ToString(const PathProgram& p) {
  std::string out = "[";
  for (size_t i = 0; i < p.motions.size(); ++i) {
    if (i) out += ", ";
    out += ToString(p.motions[i]);
  }
  return out + "]";
}

std::string ToString(const DisjunctProgram& p) {
  std::string out = "Disjunct(";
  for (size_t i = 0; i < p.paths.size(); ++i) {
    if (i) out += ", ";
    out += ToString(p.paths[i]);
  }
  return out + ")";
}

NeighborTable::NeighborTable(const BoxDocument& doc, double min_overlap)
    : doc_(&doc), table_(static_cast<size_t>(doc.size()) * 4) {
  for (int b = 0; b < doc.size(); ++b) {
    for (Direction d : kAllDirections) {
      table_[static_cast<size_t>(b) * 4 + static_cast<size_t>(d)] =
          Neighbors(doc, b, d, min_overlap);
    }
  }
}

std::optional<BoxRegion> ExecPath(const NeighborTable& table, int landmark,
                                  const PathProgram& prog) {
  if (landmark < 0 || landmark >= table.doc().size()) {
    throw InvalidLocationError("landmark box out of range");
  }
  Walk w{{landmark}, landmark};
  for (const Motion& m : prog.motions) {
    if (!Apply(table, m, w)) return std::nullopt;
  }
  return BoxRegion{std::move(w.visited)};
}

std::optional<BoxRegion> ExecPath(const BoxDocument& doc, int landmark,
                                  const PathProgram& prog, double min_overlap) {
  return ExecPath(NeighborTable(doc, min_overlap), landmark, prog);
}

std::optional<BoxRegion> ExecDisjunct(const NeighborTable& table, int landmark,
                                      const DisjunctProgram& prog) {
  for (const auto& p : prog.paths) {
    if (auto r = ExecPath(table, landmark, p)) return r;
  }
  return std::nullopt;
}

bool PathCorrect(const BoxRegion& region, const std::vector<int>& annotated) {
  if (region.boxes.empty() || annotated.empty()) return false;
  for (int a : annotated) {
    if (std::find(region.boxes.begin(), region.boxes.end(), a) ==
        region.boxes.end()) {
      return false;
    }
  }
  return std::find(annotated.begin(), annotated.end(), region.boxes.back()) !=
         annotated.end();
}

bool PathCorrect(const PathExample& ex, const PathProgram& prog) {
  const auto r = ExecPath(*ex.table, ex.landmark, prog);
  return r && PathCorrect(*r, ex.annotated);
}

std::vector<PathProgram> EnumeratePaths(std::span<const PathExample> subset,
                                        const std::vector<PatternToken>& patterns,
                                        const EnumerationConfig& config) {
  struct Node {
    PathProgram prog;
    std::vector<Walk> walks;
  };
  struct Found {
    int size;
    size_t motions;
    std::string text;
    PathProgram prog;
  };
  if (subset.empty()) return {};
  std::vector<size_t> caps;
  for (const auto& ex : subset) {
    caps.push_back(ex.annotated.size() + 1 + static_cast<size_t>(config.region_slack));
  }
  std::vector<Found> found;
  auto record = [&](const Node& n) {
    int size = 0;
    for (const auto& w : n.walks) size += static_cast<int>(w.visited.size());
    found.push_back({size, n.prog.motions.size(), ToString(n.prog), n.prog});
  };
  auto all_correct = [&](const Node& n) {
    for (size_t i = 0; i < subset.size(); ++i) {
      if (!WalkCorrect(n.walks[i], subset[i].annotated)) return false;
    }
    return true;
  };

  Node start;
  for (const auto& ex : subset) start.walks.push_back(Walk{{ex.landmark}, ex.landmark});
  std::vector<Node> frontier;
  if (all_correct(start)) {
    record(start);
  } else {
    frontier.push_back(std::move(start));
  }

  const std::vector<Motion> motions = AllMotions(patterns, config);
  std::set<std::vector<int>> seen;
  for (int depth = 1; depth <= config.max_motions && !frontier.empty(); ++depth) {
    std::vector<Node> next;
    for (const Node& node : frontier) {
      for (const Motion& m : motions) {
        Node child{node.prog, node.walks};
        bool ok = true;
        for (size_t i = 0; i < subset.size() && ok; ++i) {
          ok = Apply(*subset[i].table, m, child.walks[i], caps[i]);
        }
        if (!ok) continue;
        child.prog.motions.push_back(m);
        if (all_correct(child)) {
          record(child);
          continue;
        }
        if (depth == config.max_motions) continue;
        std::vector<int> sig;
        for (const auto& w : child.walks) {
          sig.insert(sig.end(), w.visited.begin(), w.visited.end());
          sig.push_back(-1 - w.cur);
        }
        if (!seen.insert(std::move(sig)).second) continue;
        next.push_back(std::move(child));
      }
    }
    frontier = std::move(next);
  }

  std::sort(found.begin(), found.end(), [](const Found& a, const Found& b) {
    return std::tie(a.size, a.motions, a.text) < std::tie(b.size, b.motions, b.text);
  });
  std::vector<PathProgram> out;
  for (auto& f : found) {
    if (static_cast<int>(out.size()) >= config.keep_per_subset) break;
    out.push_back(std::move(f.prog));
  }
  return out;
}

int OrderedCoverage(const OutcomeMatrix& outcomes, const std::vector<int>& order) {
  if (outcomes.empty()) return 0;
  int n = 0;
  for (size_t e = 0; e < outcomes[0].size(); ++e) {
    for (int c : order) {
      if (outcomes[c][e] == PathOutcome::kNull) continue;
      n += outcomes[c][e] == PathOutcome::kCorrect;
      break;
    }
  }
  return n;
}

std::vector<int> GreedyCover(const OutcomeMatrix& outcomes, const std::vector<int>& sizes) {
  std::vector<int> order;
  std::vector<bool> used(outcomes.size(), false);
  int current = 0;
  while (true) {
    int best = -1;
    int best_cover = current;
    std::vector<int> best_order;
    for (size_t c = 0; c < outcomes.size(); ++c) {
      if (used[c]) continue;
      // Appending wins ties, so picks keep their order unless moving helps.
      for (size_t pos = order.size() + 1; pos-- > 0;) {
        std::vector<int> o = order;
        o.insert(o.begin() + static_cast<std::ptrdiff_t>(pos), static_cast<int>(c));
        const int cover = OrderedCoverage(outcomes, o);
        if (cover > best_cover ||
            (cover == best_cover && best >= 0 && cover > current && sizes[c] < sizes[best])) {
          best = static_cast<int>(c);
          best_cover = cover;
          best_order = std::move(o);
        }
      }
    }
    if (best < 0) break;
    used[best] = true;
    order = std::move(best_order);
    current = best_cover;
  }
  for (size_t i = order.size(); i-- > 0 && order.size() > 1;) {
    std::vector<int> without = order;
    without.erase(without.begin() + static_cast<std::ptrdiff_t>(i));
    if (OrderedCoverage(outcomes, without) >= current) order = std::move(without);
  }
  return order;
}

DisjunctionResult SelectDisjunction(const std::vector<PathProgram>& candidates,
                                    std::span<const PathExample> examples) {
  DisjunctionResult result;
  result.covered.assign(examples.size(), false);
  if (candidates.empty()) return result;

  OutcomeMatrix outcomes(candidates.size());
  std::vector<int> sizes;
  for (size_t c = 0; c < candidates.size(); ++c) {
    for (const auto& ex : examples) {
      const auto r = ExecPath(*ex.table, ex.landmark, candidates[c]);
      outcomes[c].push_back(!r                              ? PathOutcome::kNull
                            : PathCorrect(*r, ex.annotated) ? PathOutcome::kCorrect
                                                            : PathOutcome::kWrong);
    }
    sizes.push_back(static_cast<int>(candidates[c].motions.size()));
  }
  const std::vector<int> order = GreedyCover(outcomes, sizes);
  for (int c : order) result.program.paths.push_back(candidates[c]);
  for (size_t e = 0; e < examples.size(); ++e) {
    for (int c : order) {
      if (outcomes[c][e] == PathOutcome::kNull) continue;
      result.covered[e] = outcomes[c][e] == PathOutcome::kCorrect;
      break;
    }
  }
  result.covered_count = OrderedCoverage(outcomes, order);
  return result;
}

DisjunctionResult SynthesizeBoxRegion(std::span<const PathExample> examples,
                                      const std::vector<PatternToken>& patterns,
                                      const EnumerationConfig& config,
                                      std::uint64_t seed) {
  if (examples.empty()) throw SynthesisError("no box region examples");
  std::vector<std::vector<size_t>> subsets;
  std::set<std::vector<size_t>> seen;
  for (size_t i = 0; i < examples.size(); ++i) {
    subsets.push_back({i});
    seen.insert({i});
  }
  const size_t n = examples.size();
  if (n >= 2 && config.max_subset_size >= 2) {
    std::mt19937_64 rng(seed);
    const size_t max_size = std::min<size_t>(config.max_subset_size, n);
    for (int r = 0; r < config.random_subsets; ++r) {
      const size_t size = 2 + static_cast<size_t>(rng() % (max_size - 1));
      std::vector<size_t> idx(n);
      std::iota(idx.begin(), idx.end(), 0);
      for (size_t i = 0; i < size; ++i) {
        const size_t j = i + static_cast<size_t>(rng() % (n - i));
        std::swap(idx[i], idx[j]);
      }
      std::vector<size_t> pick(idx.begin(), idx.begin() + size);
      std::sort(pick.begin(), pick.end());
      if (seen.insert(pick).second) subsets.push_back(std::move(pick));
    }
  }
  std::set<PathProgram> unique;
  std::vector<PathProgram> candidates;
  for (const auto& s : subsets) {
    std::vector<PathExample> sub;
    for (size_t i : s) sub.push_back(examples[i]);
    for (auto& p : EnumeratePaths(sub, patterns, config)) {
      if (unique.insert(p).second) candidates.push_back(std::move(p));
    }
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const PathProgram& a, const PathProgram& b) {
                     if (a.motions.size() != b.motions.size()) {
                       return a.motions.size() < b.motions.size();
                     }
                     return ToString(a) < ToString(b);
                   });
  return SelectDisjunction(candidates, examples);
}

}  // namespace lrx
