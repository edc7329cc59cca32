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
// Program bundles: the trained programs of every field as versioned JSON.
// Serialization is deterministic; equal bundles give equal bytes.

#ifndef LRX_BUNDLE_H_
#define LRX_BUNDLE_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lrx/runtime.h"

namespace lrx {

inline constexpr int kBundleVersion = 1;

struct Bundle {
  std::vector<ExtractionProgram> programs;  // sorted by field

  const ExtractionProgram* Find(const std::string& field) const;
  bool operator==(const Bundle&) const = default;
};

std::string SerializeBundle(const Bundle& bundle);
// Throws BundleError on malformed input or an unknown version.
Bundle ParseBundle(std::string_view bytes);

void SaveBundle(const Bundle& bundle, const std::string& path);
Bundle LoadBundle(const std::string& path);

// field -> value (nullopt when the program abstains).
using Prediction = std::map<std::string, std::optional<FieldValue>>;

Prediction ExtractAll(const Document& doc, const Bundle& bundle);

}  // namespace lrx

#endif  // LRX_BUNDLE_H_
