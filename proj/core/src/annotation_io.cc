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
#include "lrx/annotation_io.h"

#include <set>

#include <nlohmann/json.hpp>

#include "lrx/errors.h"

namespace lrx {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

Location LocationFromJson(const json& j) {
  if (j.is_number_integer()) return BoxIndex{j.get<int>()};
  if (j.is_array()) {
    TreePath path;
    for (const auto& step : j) {
      if (!step.is_number_integer() || step.get<int>() < 0) {
        throw ParseError("tree path steps must be non-negative integers");
      }
      path.steps.push_back(step.get<int>());
    }
    return path;
  }
  throw ParseError("location must be a path array or a box index");
}

ordered_json LocationToJson(const Location& loc) {
  if (const auto* p = std::get_if<TreePath>(&loc)) {
    ordered_json arr = ordered_json::array();
    for (int s : p->steps) arr.push_back(s);
    return arr;
  }
  return std::get<BoxIndex>(loc).value;
}

}  // namespace

std::string_view ToString(AggKind kind) {
  switch (kind) {
    case AggKind::kSingle:
      return "single";
    case AggKind::kOrderedList:
      return "list";
    case AggKind::kConcat:
      return "concat";
  }
  return "single";
}

AggKind ParseAggKind(std::string_view name) {
  if (name == "single") return AggKind::kSingle;
  if (name == "list") return AggKind::kOrderedList;
  if (name == "concat") return AggKind::kConcat;
  throw ParseError("unknown aggregation \"" + std::string(name) + "\"");
}

AnnotationSet ParseAnnotations(std::string_view bytes) {
  json j;
  try {
    j = json::parse(bytes);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid annotation JSON: ") + e.what(),
                     e.byte > 0 ? e.byte - 1 : 0);
  }
  auto docs = j.find("documents");
  if (!j.is_object() || docs == j.end() || !docs->is_object()) {
    throw ParseError("annotation file needs a \"documents\" object");
  }
  AnnotationSet out;
  for (const auto& [doc_id, fields] : docs->items()) {
    if (!fields.is_object()) throw ParseError(doc_id + ": expected an object");
    DocAnnotations& doc = out[doc_id];
    for (const auto& [field, a] : fields.items()) {
      const std::string where = doc_id + "/" + field;
      if (!a.is_object()) throw ParseError(where + ": expected an object");
      Annotation ann;
      ann.agg.kind = ParseAggKind(a.value("agg", "single"));
      ann.agg.separator = a.value("separator", "");
      auto locs = a.find("locations");
      auto values = a.find("values");
      if (locs == a.end() || !locs->is_array() || values == a.end() ||
          !values->is_array()) {
        throw ParseError(where + ": needs \"locations\" and \"values\" arrays");
      }
      for (const auto& l : *locs) ann.locations.push_back(LocationFromJson(l));
      for (const auto& v : *values) {
        if (!v.is_string()) throw ParseError(where + ": values are strings");
        ann.values.push_back(v.get<std::string>());
      }
      try {
        ann.Validate();
      } catch (const Error& e) {
        throw Error(where + ": " + e.what());
      }
      doc[field] = std::move(ann);
    }
  }
  return out;
}

std::string SerializeAnnotations(const AnnotationSet& annotations) {
  ordered_json docs = ordered_json::object();
  for (const auto& [doc_id, fields] : annotations) {
    ordered_json f = ordered_json::object();
    for (const auto& [name, a] : fields) {
      ordered_json j;
      j["agg"] = std::string(ToString(a.agg.kind));
      if (a.agg.kind == AggKind::kConcat) j["separator"] = a.agg.separator;
      j["locations"] = ordered_json::array();
      for (const auto& l : a.locations) j["locations"].push_back(LocationToJson(l));
      j["values"] = a.values;
      f[name] = std::move(j);
    }
    docs[doc_id] = std::move(f);
  }
  ordered_json root;
  root["documents"] = std::move(docs);
  return root.dump(1, ' ') + "\n";
}

std::vector<std::string> FieldNames(const AnnotationSet& annotations) {
  std::set<std::string> names;
  for (const auto& [doc, fields] : annotations) {
    for (const auto& [name, a] : fields) names.insert(name);
  }
  return {names.begin(), names.end()};
}

}  // namespace lrx
