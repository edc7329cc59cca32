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
// Landmark inference and clustering of the training documents of one field.
//
// Documents start in fine clusters of identical whole-document blueprints.
// Each fine cluster ranks landmark candidates; documents whose regions of
// interest look alike under a shared candidate are then merged bottom-up.

#ifndef LRX_CLUSTER_H_
#define LRX_CLUSTER_H_

#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lrx/blueprint.h"
#include "lrx/config.h"
#include "lrx/docmodel.h"

namespace lrx {

// The annotated training documents of one field; the two vectors align.
struct FieldExamples {
  std::vector<const Document*> docs;
  std::vector<const Annotation*> annotations;

  DocKind kind() const { return docs.front()->kind(); }
  int size() const { return static_cast<int>(docs.size()); }
};

struct LandmarkCandidate {
  std::string ngram;
  double score = 0;
  double distance = 0;  // mean over documents
  double size = 0;

  bool operator==(const LandmarkCandidate&) const = default;
};

// Token n-grams of node own texts (box texts) present in every member
// document, free of stop words, neither part of nor containing an annotated
// value.
std::vector<std::string> CandidateNGrams(const FieldExamples& ex,
                                         const std::vector<int>& members,
                                         const ScoringWeights& w);

// nullopt when the n-gram is missing from a member document.
std::optional<LandmarkCandidate> ScoreCandidate(const FieldExamples& ex,
                                                const std::vector<int>& members,
                                                const std::string& ngram,
                                                const ScoringWeights& w);

// Best `top_k` candidates: higher score, then more tokens, then
// lexicographic.
std::vector<LandmarkCandidate> RankLandmarks(const FieldExamples& ex,
                                             const std::vector<int>& members,
                                             const ScoringWeights& w);

// Blueprint vocabulary over all training documents: common node values for
// trees, n-grams frequent in every document for boxes.
CommonValueIndex TrainingVocabulary(const std::vector<const Document*>& docs,
                                    const Config& config);

// Groups of identical whole-document blueprints, each sorted, ordered by
// first member.
std::vector<std::vector<int>> InitialClusters(const FieldExamples& ex,
                                              const Config& config);

struct Cluster {
  int id = 0;  // smallest member
  std::vector<int> members;
  std::vector<LandmarkCandidate> candidates;  // empty: no landmark found
};

inline constexpr double kInfiniteDistance =
    std::numeric_limits<double>::infinity();

// ROI blueprints of one document: candidate n-gram -> blueprint of the
// region enclosing the first anchored instance.
using RoiBlueprints = std::map<std::string, Blueprint>;

RoiBlueprints ComputeRoiBlueprints(const FieldExamples& ex, int doc,
                                   const std::vector<LandmarkCandidate>& cands,
                                   const CommonValueIndex& vocabulary,
                                   const Config& config);

// Smallest blueprint distance over shared candidates, infinite when none.
double DocumentDistance(const RoiBlueprints& a, const RoiBlueprints& b);

struct ClusteringResult {
  std::vector<Cluster> fine;
  std::vector<Cluster> merged;  // candidates re-ranked over the members
};

ClusteringResult InferLandmarksAndCluster(const FieldExamples& ex,
                                          const Config& config);

}  // namespace lrx

#endif  // LRX_CLUSTER_H_
