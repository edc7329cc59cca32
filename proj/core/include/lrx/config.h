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
// Every tunable of synthesis and extraction. Defaults match
// data/lrx.config.json.

#ifndef LRX_CONFIG_H_
#define LRX_CONFIG_H_

#include <cstdint>
#include <set>
#include <string>
#include <string_view>

namespace lrx {

struct ScoringWeights {
  double w_distance = 1.0;
  double w_region_size = 1.0;
  int max_n = 5;
  int top_k = 10;
  std::set<std::string> stop_words;
};

struct GeometryConfig {
  double row_tolerance = -1;  // negative: half the median box height
  double min_overlap = 0.25;
  double summary_radius = 3.0;
};

struct EnumerationConfig {
  int max_motions = 4;
  int max_k = 4;
  int random_subsets = 20;
  int max_subset_size = 3;
  int region_slack = 3;
  int keep_per_subset = 64;
};

struct SelectorConfig {
  int max_steps = 4;
  int max_atoms_per_step = 2;
};

struct Config {
  ScoringWeights scoring;
  GeometryConfig geometry;
  EnumerationConfig enumeration;
  SelectorConfig selectors;
  double threshold = 0;        // runtime blueprint gate
  double merge_threshold = 0;  // cluster merging
  int guard_depth = 2;
  std::uint64_t seed = 20260101;
};

// The built-in stop-word list (same content as data/stopwords.txt).
std::set<std::string> DefaultStopWords();
// One word per line; '#' starts a comment.
std::set<std::string> ParseStopWords(std::string_view text);

Config DefaultConfig();
// JSON with // comments. Missing keys keep their defaults. A
// "stop_words_file" entry is resolved relative to `base_dir`.
Config ParseConfig(std::string_view bytes, const std::string& base_dir = ".");
Config LoadConfig(const std::string& path);

}  // namespace lrx

#endif  // LRX_CONFIG_H_
