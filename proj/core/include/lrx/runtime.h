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
// Extraction programs and their synthesis.
//
// A program is an ordered list of tuples, one per document cluster:
//
//   (landmark, region program, blueprint, value program [, guard])
//
// Extraction tries the tuples in order. For each occurrence of the landmark
// it runs the region program, drops regions whose blueprint is farther than
// the threshold from the stored one, and runs the value program on the rest.
// The first tuple that yields any value decides the result.

#ifndef LRX_RUNTIME_H_
#define LRX_RUNTIME_H_

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lrx/blueprint.h"
#include "lrx/cluster.h"
#include "lrx/config.h"
#include "lrx/docmodel.h"
#include "lrx/region_box.h"
#include "lrx/region_tree.h"
#include "lrx/value_extract.h"

namespace lrx {

using RegionProgram = std::variant<HopsProgram, DisjunctProgram>;

std::string ToString(const RegionProgram& p);

struct ExtractionProgram;

struct ExtractionTuple {
  std::string landmark;
  RegionProgram region;
  Blueprint blueprint;
  CommonValueIndex vocabulary;
  ValueProgram value;
  // Trees only: landmark occurrences are kept only where the guard program
  // extracts them.
  std::shared_ptr<const ExtractionProgram> guard;
};

struct ExtractionProgram {
  std::string field;
  DocKind kind = DocKind::kTree;
  Aggregation agg;
  double threshold = 0;
  BlueprintOptions blueprint_options;
  double min_overlap = 0.25;
  std::vector<ExtractionTuple> tuples;
};

bool operator==(const ExtractionTuple& a, const ExtractionTuple& b);
bool operator==(const ExtractionProgram& a, const ExtractionProgram& b);

// Values one tuple yields on a document, with their sources (node ids for
// trees; the last region box for boxes), before aggregation.
struct TupleOutput {
  std::vector<std::string> values;
  std::vector<int> sources;
  int occurrences = 0;
  int gated = 0;  // regions rejected by the blueprint check
};

TupleOutput RunTuple(const ExtractionProgram& prog, const ExtractionTuple& tuple,
                     const Document& doc);

struct ExtractionTrace {
  int tuple = -1;                     // the tuple that decided, -1 if none
  std::vector<int> matching_tuples;   // every tuple that yields values
  std::vector<int> sources;
};

// nullopt when no tuple yields a value or aggregation is ambiguous. With a
// trace, every tuple is run so that overlapping tuples can be reported.
std::optional<FieldValue> Extract(const Document& doc,
                                  const ExtractionProgram& prog,
                                  ExtractionTrace* trace = nullptr);

// Region, blueprint and value programs for one cluster and landmark. Throws
// SynthesisError.
ExtractionTuple SynthesizeTuple(const FieldExamples& ex,
                                const std::vector<int>& members,
                                const std::string& landmark,
                                const Aggregation& agg,
                                const CommonValueIndex& vocabulary,
                                const Config& config,
                                std::vector<std::string>* warnings = nullptr);

struct ClusterReport {
  int id = 0;
  std::vector<std::string> docs;
  std::vector<LandmarkCandidate> candidates;
  std::string landmark;  // the one used; empty when the cluster failed
  bool sound = false;    // reproduces every member annotation on its own
  bool guarded = false;
  std::string note;
};

struct SynthesisReport {
  std::string field;
  std::vector<ClusterReport> clusters;
  std::vector<std::string> warnings;
};

// Synthesizes the program of one field from every document annotating it.
// Throws SynthesisError when no cluster yields a tuple.
ExtractionProgram SynthesizeField(const std::vector<Document>& docs,
                                  const AnnotationSet& annotations,
                                  const std::string& field,
                                  const Config& config,
                                  SynthesisReport* report = nullptr);

ExtractionProgram SynthesizeField(const FieldExamples& ex,
                                  const std::string& field,
                                  const Config& config,
                                  SynthesisReport* report = nullptr);

}  // namespace lrx

#endif  // LRX_RUNTIME_H_
