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
// Seeded synthetic corpora with gold annotations.
//
// "flights" produces itinerary emails (trees) in three layouts; "invoice"
// produces OCR'd vehicle invoices (boxes). Perturbations model the format
// drift the extractor must survive (changes outside the region of interest)
// or must refuse (changes inside it). Output depends only on the options.

#ifndef LRX_CORPUS_H_
#define LRX_CORPUS_H_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "lrx/docmodel.h"

namespace lrx {

enum class Template { kFlights, kInvoice };

enum class Perturbation {
  kNone,
  kInsertSectionOutsideRoi,
  kPermuteSections,
  kDuplicateRoi,
  kRemoveRoi,
  kMutateInsideRoi,
  kTranslateBoxes,
  kInsertAdBanner,
};

std::string_view ToString(Template t);
Template ParseTemplate(std::string_view name);
std::string_view ToString(Perturbation p);
Perturbation ParsePerturbation(std::string_view name);

struct TemplateField {
  std::string name;
  std::string landmark;  // the label phrase the layout puts next to the value
  Aggregation agg;
};

const std::vector<TemplateField>& TemplateFields(Template t);

struct CorpusOptions {
  Template tmpl = Template::kFlights;
  int count = 5;
  std::uint64_t seed = 1;
  int first_index = 0;  // index of the first document
  Perturbation perturbation = Perturbation::kNone;
  std::string target_field;  // kMutateInsideRoi; empty picks per document
};

struct CorpusEntry {
  std::string id;
  std::string file;
  int index = 0;
  int layout = 0;
  std::string perturbation;
  std::string target_field;
};

struct Corpus {
  std::vector<Document> docs;
  AnnotationSet annotations;
  std::vector<CorpusEntry> entries;  // aligned with docs
};

Corpus GenerateCorpus(const CorpusOptions& options);

// Documents, annotations.json and manifest.json under `dir`.
void WriteCorpus(const Corpus& corpus, const std::string& dir);
Corpus LoadCorpus(const std::string& dir);

}  // namespace lrx

#endif  // LRX_CORPUS_H_
