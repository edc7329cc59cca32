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
// Reading and writing document files.
//
// Normalized tree file (canonical, UTF-8 JSON, one document per file):
//
//   {"tag": "tr", "attrs": {"class": "leg"}, "text": "",
//    "children": [{"tag": "td", "attrs": {}, "text": "Depart:",
//                  "children": []}, ...]}
//
// "attrs", "text" and "children" may be omitted on input. Box file: a JSON
// array of {"text": "...", "x": 10, "y": 10, "w": 40, "h": 12}.

#ifndef LRX_INGEST_H_
#define LRX_INGEST_H_

#include <string>
#include <string_view>

#include "lrx/docmodel.h"

namespace lrx {

// Accepts either the normalized tree format (input starting with '{') or a
// well-nested HTML subset. Throws ParseError.
TreeDocument IngestTree(std::string_view bytes);
TreeDocument IngestHtml(std::string_view bytes);
TreeDocument IngestTreeJson(std::string_view bytes);

// Deterministic, two-space indented. IngestTree(SerializeTree(d)) == d.
std::string SerializeTree(const TreeDocument& doc);

BoxDocument IngestBoxes(std::string_view bytes, double row_tolerance = -1);
std::string SerializeBoxes(const BoxDocument& doc);

// Loads a document by extension: .json/.tree/.html/.htm as a tree,
// .boxes.json as boxes. The id is the file name without its extension(s).
Document LoadDocument(const std::string& path, double row_tolerance = -1);
std::string DocumentIdFromPath(const std::string& path);

std::string ReadFile(const std::string& path);
void WriteFile(const std::string& path, std::string_view bytes);

}  // namespace lrx

#endif  // LRX_INGEST_H_
