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
// Predictions files and field-level precision / recall / F1.
//
// precision = correct / (non-null predictions)
// recall    = correct / (documents whose field is annotated)

#ifndef LRX_EVAL_H_
#define LRX_EVAL_H_

#include <map>
#include <string>
#include <string_view>

#include "lrx/bundle.h"
#include "lrx/docmodel.h"

namespace lrx {

// doc id -> prediction
using PredictionSet = std::map<std::string, Prediction>;

// One JSON object per line: {"doc": id, "fields": {field: [values] | null}}.
std::string SerializePredictions(const PredictionSet& preds);
PredictionSet ParsePredictions(std::string_view bytes);

struct FieldMetrics {
  int correct = 0;
  int incorrect = 0;   // non-null and wrong (or no gold value)
  int abstained = 0;   // null where gold exists
  int gold = 0;        // documents with the field annotated
  double precision = 0;
  double recall = 0;
  double f1 = 0;
};

struct EvalReport {
  std::map<std::string, FieldMetrics> fields;
  FieldMetrics overall;  // counts summed over fields
};

// Every field of `gold` and `preds` over every document in `preds`.
EvalReport Evaluate(const PredictionSet& preds, const AnnotationSet& gold);

// Fills precision, recall and f1 from the counts.
void Finalize(FieldMetrics& m);

std::string SerializeReport(const EvalReport& report);

}  // namespace lrx

#endif  // LRX_EVAL_H_
