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
#include "lrx/config.h"

#include <filesystem>

#include <nlohmann/json.hpp>

#include "lrx/errors.h"
#include "lrx/ingest.h"
#include "lrx/text.h"

namespace lrx {
namespace {

using nlohmann::json;

constexpr std::string_view kDefaultStopWords =
    "a an the and or of to in on at for by with from is are was be this that "
    "these those it its i me my we us our you your he him his she her they "
    "them their";

template <typename T>
void Read(const json& j, const char* key, T& out) {
  auto it = j.find(key);
  if (it == j.end()) return;
  try {
    out = it->get<T>();
  } catch (const json::exception&) {
    throw ParseError(std::string("config key \"") + key + "\" has wrong type");
  }
}

const json& Section(const json& j, const char* key) {
  static const json kEmpty = json::object();
  auto it = j.find(key);
  if (it == j.end()) return kEmpty;
  if (!it->is_object()) {
    throw ParseError(std::string("config section \"") + key +
                     "\" must be an object");
  }
  return *it;
}

}  // namespace

std::set<std::string> DefaultStopWords() {
  std::set<std::string> out;
  for (auto& w : SplitWhitespace(kDefaultStopWords)) out.insert(std::move(w));
  return out;
}

std::set<std::string> ParseStopWords(std::string_view text) {
  std::set<std::string> out;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const std::string word = ToLower(Trim(line));
    if (!word.empty()) out.insert(word);
    pos = end + 1;
  }
  return out;
}

Config DefaultConfig() {
  Config c;
  c.scoring.stop_words = DefaultStopWords();
  return c;
}

Config ParseConfig(std::string_view bytes, const std::string& base_dir) {
  json j;
  try {
    j = json::parse(bytes, nullptr, true, true);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid config: ") + e.what(),
                     e.byte > 0 ? e.byte - 1 : 0);
  }
  if (!j.is_object()) throw ParseError("config must be a JSON object");
  Config c = DefaultConfig();

  const json& scoring = Section(j, "scoring");
  Read(scoring, "w_distance", c.scoring.w_distance);
  Read(scoring, "w_region_size", c.scoring.w_region_size);
  Read(scoring, "max_n", c.scoring.max_n);
  Read(scoring, "top_k", c.scoring.top_k);
  if (auto it = scoring.find("stop_words_file"); it != scoring.end()) {
    std::filesystem::path p = it->get<std::string>();
    if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
    c.scoring.stop_words = ParseStopWords(ReadFile(p.string()));
  }
  if (auto it = scoring.find("stop_words"); it != scoring.end()) {
    c.scoring.stop_words.clear();
    for (const auto& w : *it) c.scoring.stop_words.insert(ToLower(w.get<std::string>()));
  }

  const json& geometry = Section(j, "geometry");
  Read(geometry, "row_tolerance", c.geometry.row_tolerance);
  Read(geometry, "min_overlap", c.geometry.min_overlap);
  Read(geometry, "summary_radius", c.geometry.summary_radius);

  const json& enumeration = Section(j, "enumeration");
  Read(enumeration, "max_motions", c.enumeration.max_motions);
  Read(enumeration, "max_k", c.enumeration.max_k);
  Read(enumeration, "random_subsets", c.enumeration.random_subsets);
  Read(enumeration, "max_subset_size", c.enumeration.max_subset_size);
  Read(enumeration, "region_slack", c.enumeration.region_slack);
  Read(enumeration, "keep_per_subset", c.enumeration.keep_per_subset);

  const json& selectors = Section(j, "selectors");
  Read(selectors, "max_steps", c.selectors.max_steps);
  Read(selectors, "max_atoms_per_step", c.selectors.max_atoms_per_step);

  Read(j, "threshold", c.threshold);
  Read(j, "merge_threshold", c.merge_threshold);
  Read(j, "guard_depth", c.guard_depth);
  Read(j, "seed", c.seed);

  if (c.scoring.w_distance < 0 || c.scoring.w_region_size < 0 ||
      c.scoring.w_distance + c.scoring.w_region_size <= 0) {
    throw ParseError("scoring weights must be non-negative with a positive sum");
  }
  if (c.scoring.max_n < 1 || c.scoring.top_k < 1) {
    throw ParseError("max_n and top_k must be positive");
  }
  if (c.threshold < 0 || c.threshold > 1) {
    throw ParseError("threshold must lie in [0, 1]");
  }
  if (c.enumeration.max_motions < 0 || c.enumeration.max_motions > 4 ||
      c.enumeration.max_k < 1 || c.enumeration.max_k > 4) {
    throw ParseError("paths have at most 4 motions and 1 <= k <= 4");
  }
  return c;
}

Config LoadConfig(const std::string& path) {
  return ParseConfig(ReadFile(path),
                     std::filesystem::path(path).parent_path().string());
}

}  // namespace lrx
