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
#include "lrx/cluster.h"

#include <algorithm>
#include <set>

#include "lrx/errors.h"
#include "lrx/roi.h"
#include "lrx/text.h"

namespace lrx {
namespace {

std::set<std::string> DocNGrams(const Document& doc, int max_n) {
  std::set<std::string> out;
  if (doc.kind() == DocKind::kTree) {
    const TreeDocument& t = doc.tree();
    for (NodeId n = 0; n < t.size(); ++n) {
      for (auto& g : TokenNGrams(t.node(n).own_text, max_n)) out.insert(g);
    }
  } else {
    for (const auto& b : doc.boxes().boxes()) {
      for (auto& g : TokenNGrams(b.text, max_n)) out.insert(g);
    }
  }
  return out;
}

bool HasStopWord(const std::string& ngram, const std::set<std::string>& stop) {
  for (const auto& tok : SplitWhitespace(ngram)) {
    if (IsPunctuationOnly(tok) || stop.count(ToLower(tok))) return true;
  }
  return false;
}

int TokenCount(const std::string& s) {
  return static_cast<int>(SplitWhitespace(s).size());
}

BlueprintOptions Options(const Config& config) {
  return {config.scoring.max_n, config.geometry.summary_radius};
}

}  // namespace

std::vector<std::string> CandidateNGrams(const FieldExamples& ex,
                                         const std::vector<int>& members,
                                         const ScoringWeights& w) {
  std::set<std::string> common;
  bool first = true;
  for (int i : members) {
    std::set<std::string> grams = DocNGrams(*ex.docs[i], w.max_n);
    if (first) {
      common = std::move(grams);
      first = false;
      continue;
    }
    std::set<std::string> both;
    std::set_intersection(common.begin(), common.end(), grams.begin(),
                          grams.end(), std::inserter(both, both.end()));
    common = std::move(both);
  }
  std::vector<std::string> values;
  for (int i : members) {
    for (const auto& v : ex.annotations[i]->values) values.push_back(v);
  }
  std::vector<std::string> out;
  for (const auto& g : common) {
    if (HasStopWord(g, w.stop_words)) continue;
    bool in_value = false;
    for (const auto& v : values) {
      if (v.find(g) != std::string::npos || (!v.empty() && g.find(v) != std::string::npos)) {
        in_value = true;
        break;
      }
    }
    if (!in_value) out.push_back(g);
  }
  return out;
}

std::optional<LandmarkCandidate> ScoreCandidate(const FieldExamples& ex,
                                                const std::vector<int>& members,
                                                const std::string& ngram,
                                                const ScoringWeights& w) {
  LandmarkCandidate c;
  c.ngram = ngram;
  for (int i : members) {
    const Document& doc = *ex.docs[i];
    auto instances = AssignInstances(doc, *ex.annotations[i], Locate(doc, ngram));
    if (instances.empty()) return std::nullopt;
    double d = 0, s = 0;
    for (const auto& inst : instances) {
      RoiFeatures f = InstanceFeatures(doc, inst);
      d += f.distance;
      s += f.size;
    }
    d /= static_cast<double>(instances.size());
    s /= static_cast<double>(instances.size());
    c.distance += d;
    c.size += s;
    c.score += 1.0 / (1.0 + w.w_distance * d + w.w_region_size * s);
  }
  const double n = static_cast<double>(members.size());
  c.distance /= n;
  c.size /= n;
  c.score /= n;
  return c;
}

std::vector<LandmarkCandidate> RankLandmarks(const FieldExamples& ex,
                                             const std::vector<int>& members,
                                             const ScoringWeights& w) {
  std::vector<LandmarkCandidate> out;
  for (const auto& g : CandidateNGrams(ex, members, w)) {
    if (auto c = ScoreCandidate(ex, members, g, w)) out.push_back(*c);
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.score != b.score) return a.score > b.score;
    const int ta = TokenCount(a.ngram), tb = TokenCount(b.ngram);
    if (ta != tb) return ta > tb;
    return a.ngram < b.ngram;
  });
  if (w.top_k >= 0 && out.size() > static_cast<size_t>(w.top_k)) {
    out.resize(w.top_k);
  }
  return out;
}

CommonValueIndex TrainingVocabulary(const std::vector<const Document*>& docs,
                                    const Config& config) {
  if (docs.empty()) return {};
  if (docs.front()->kind() == DocKind::kTree) {
    std::vector<const TreeDocument*> trees;
    for (const auto* d : docs) trees.push_back(&d->tree());
    return CommonValues(trees);
  }
  std::vector<const BoxDocument*> boxes;
  for (const auto* d : docs) boxes.push_back(&d->boxes());
  return FrequentNGrams(boxes, config.scoring.max_n, true);
}

std::vector<std::vector<int>> InitialClusters(const FieldExamples& ex,
                                              const Config& config) {
  for (const Document* d : ex.docs) {
    if (d->kind() != ex.kind()) throw Error("tree and box documents cannot share a field");
  }
  CommonValueIndex box_vocab;
  if (ex.size() > 0 && ex.kind() == DocKind::kBox) {
    box_vocab = TrainingVocabulary(ex.docs, config);
  }
  std::vector<Blueprint> keys;
  std::vector<std::vector<int>> groups;
  for (int i = 0; i < ex.size(); ++i) {
    const Document& doc = *ex.docs[i];
    Blueprint bp;
    if (doc.kind() == DocKind::kTree) {
      CommonValueIndex own;
      own.values = NodeValues(doc.tree());
      bp = DocumentBlueprint(doc, own, Options(config));
    } else {
      bp = DocumentBlueprint(doc, box_vocab, Options(config));
    }
    auto it = std::find(keys.begin(), keys.end(), bp);
    if (it == keys.end()) {
      keys.push_back(std::move(bp));
      groups.push_back({i});
    } else {
      groups[it - keys.begin()].push_back(i);
    }
  }
  return groups;
}

RoiBlueprints ComputeRoiBlueprints(const FieldExamples& ex, int doc_index,
                                   const std::vector<LandmarkCandidate>& cands,
                                   const CommonValueIndex& vocabulary,
                                   const Config& config) {
  RoiBlueprints out;
  const Document& doc = *ex.docs[doc_index];
  for (const auto& c : cands) {
    auto instances =
        AssignInstances(doc, *ex.annotations[doc_index], Locate(doc, c.ngram));
    if (instances.empty()) continue;
    out.emplace(c.ngram, ComputeBlueprint(InstanceRegion(doc, instances[0]),
                                          doc, vocabulary, Options(config)));
  }
  return out;
}

double DocumentDistance(const RoiBlueprints& a, const RoiBlueprints& b) {
  double best = kInfiniteDistance;
  for (const auto& [ngram, bp] : a) {
    auto it = b.find(ngram);
    if (it != b.end()) best = std::min(best, Delta(bp, it->second));
  }
  return best;
}

ClusteringResult InferLandmarksAndCluster(const FieldExamples& ex,
                                          const Config& config) {
  ClusteringResult result;
  for (auto& members : InitialClusters(ex, config)) {
    Cluster c;
    c.id = members.front();
    c.candidates = RankLandmarks(ex, members, config.scoring);
    c.members = std::move(members);
    result.fine.push_back(std::move(c));
  }

  const CommonValueIndex vocab = TrainingVocabulary(ex.docs, config);
  // Every document is summarized under the candidates of every fine cluster,
  // so two clusters can meet on a landmark only one of them ranks highly.
  std::vector<LandmarkCandidate> all;
  for (const auto& c : result.fine) {
    for (const auto& cand : c.candidates) {
      if (std::none_of(all.begin(), all.end(),
                       [&](const auto& a) { return a.ngram == cand.ngram; })) {
        all.push_back(cand);
      }
    }
  }
  std::vector<RoiBlueprints> roi(ex.size());
  for (int d = 0; d < ex.size(); ++d) {
    roi[d] = ComputeRoiBlueprints(ex, d, all, vocab, config);
  }

  std::vector<std::vector<int>> groups;
  for (const auto& c : result.fine) groups.push_back(c.members);
  while (groups.size() > 1) {
    double best = kInfiniteDistance;
    size_t ba = 0, bb = 0;
    for (size_t a = 0; a < groups.size(); ++a) {
      for (size_t b = a + 1; b < groups.size(); ++b) {
        double sum = 0;
        for (int x : groups[a]) {
          for (int y : groups[b]) sum += DocumentDistance(roi[x], roi[y]);
        }
        const double avg =
            sum / static_cast<double>(groups[a].size() * groups[b].size());
        if (avg < best) {
          best = avg;
          ba = a;
          bb = b;
        }
      }
    }
    if (!(best <= config.merge_threshold)) break;
    groups[ba].insert(groups[ba].end(), groups[bb].begin(), groups[bb].end());
    std::sort(groups[ba].begin(), groups[ba].end());
    groups.erase(groups.begin() + static_cast<std::ptrdiff_t>(bb));
    std::sort(groups.begin(), groups.end());
  }

  for (auto& members : groups) {
    Cluster c;
    c.id = members.front();
    auto fine = std::find_if(result.fine.begin(), result.fine.end(),
                             [&](const Cluster& f) { return f.members == members; });
    c.candidates = fine != result.fine.end()
                       ? fine->candidates
                       : RankLandmarks(ex, members, config.scoring);
    c.members = std::move(members);
    result.merged.push_back(std::move(c));
  }
  return result;
}

}  // namespace lrx
