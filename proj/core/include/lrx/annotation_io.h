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
// Annotation file format (UTF-8 JSON):
//
//   {"documents": {
//     "doc-001": {
//       "depart_time": {"agg": "list", "locations": [[0, 1, 3], [0, 2, 3]],
//                       "values": ["8:18 PM", "6:05 AM"]},
//       "total": {"agg": "single", "locations": [17], "values": ["$12.50"]},
//       "name": {"agg": "concat", "separator": " ", "locations": [4, 5],
//                "values": ["Ada Lovelace"]}}}}
//
// Tree locations are child-index paths from the root, box locations are
// indices into the document-ordered box list.

#ifndef LRX_ANNOTATION_IO_H_
#define LRX_ANNOTATION_IO_H_

#include <string>
#include <string_view>

#include "lrx/docmodel.h"

namespace lrx {

// Throws ParseError on malformed input and Error on annotations whose shape
// does not fit their aggregation kind.
AnnotationSet ParseAnnotations(std::string_view bytes);
std::string SerializeAnnotations(const AnnotationSet& annotations);

std::string_view ToString(AggKind kind);
AggKind ParseAggKind(std::string_view name);

// Fields annotated anywhere in the set, sorted.
std::vector<std::string> FieldNames(const AnnotationSet& annotations);

}  // namespace lrx

#endif  // LRX_ANNOTATION_IO_H_
