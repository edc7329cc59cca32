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
#include "lrx/eval.h"

#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "lrx/errors.h"

namespace lrx {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json MetricsJson(const FieldMetrics& m) {
  ordered_json j;
  j["correct"] = m.correct;
  j["incorrect"] = m.incorrect;
  j["abstained"] = m.abstained;
  j["gold"] = m.gold;
  j["precision"] = m.precision;
  j["recall"] = m.recall;
  j["f1"] = m.f1;
  return j;
}

void Add(FieldMetrics& into, const FieldMetrics& m) {
  into.correct += m.correct;
  into.incorrect += m.incorrect;
  into.abstained += m.abstained;
  into.gold += m.gold;
}

}  // namespace

std::string SerializePredictions(const PredictionSet& preds) {
  std::string out;
  for (const auto& [doc, fields] : preds) {
    ordered_json j;
    j["doc"] = doc;
    j["fields"] = ordered_json::object();
    for (const auto& [field, value] : fields) {
      j["fields"][field] = value ? ordered_json(*value) : ordered_json(nullptr);
    }
    out += j.dump();
    out += '\n';
  }
  return out;
}

PredictionSet ParsePredictions(std::string_view bytes) {
  PredictionSet out;
  std::istringstream in{std::string(bytes)};
  std::string line;
  size_t offset = 0;
  while (std::getline(in, line)) {
    const size_t here = offset;
    offset += line.size() + 1;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      json j = json::parse(line);
      Prediction p;
      for (const auto& [field, v] : j.at("fields").items()) {
        if (v.is_null()) {
          p[field] = std::nullopt;
        } else {
          p[field] = v.get<FieldValue>();
        }
      }
      out[j.at("doc").get<std::string>()] = std::move(p);
    } catch (const json::exception& e) {
      throw ParseError(std::string("bad predictions line: ") + e.what(), here);
    }
  }
  return out;
}

void Finalize(FieldMetrics& m) {
  const int predicted = m.correct + m.incorrect;
  m.precision = predicted > 0 ? static_cast<double>(m.correct) / predicted : 0;
  m.recall = m.gold > 0 ? static_cast<double>(m.correct) / m.gold : 0;
  m.f1 = m.precision + m.recall > 0
             ? 2 * m.precision * m.recall / (m.precision + m.recall)
             : 0;
}

EvalReport Evaluate(const PredictionSet& preds, const AnnotationSet& gold) {
  std::set<std::string> fields;
  for (const auto& [doc, p] : preds) {
    for (const auto& [f, v] : p) fields.insert(f);
  }
  for (const auto& [doc, anns] : gold) {
    if (!preds.count(doc)) continue;
    for (const auto& [f, a] : anns) fields.insert(f);
  }
  EvalReport report;
  for (const auto& field : fields) {
    FieldMetrics m;
    for (const auto& [doc, p] : preds) {
      const Annotation* g = nullptr;
      if (auto d = gold.find(doc); d != gold.end()) {
        if (auto f = d->second.find(field); f != d->second.end()) g = &f->second;
      }
      std::optional<FieldValue> got;
      if (auto it = p.find(field); it != p.end()) got = it->second;
      if (g) ++m.gold;
      if (!got) {
        if (g) ++m.abstained;
      } else if (g && *got == g->values) {
        ++m.correct;
      } else {
        ++m.incorrect;
      }
    }
    Finalize(m);
    Add(report.overall, m);
    report.fields[field] = m;
  }
  Finalize(report.overall);
  return report;
}

std::string SerializeReport(const EvalReport& report) {
  ordered_json j;
  j["fields"] = ordered_json::object();
  for (const auto& [f, m] : report.fields) j["fields"][f] = MetricsJson(m);
  j["overall"] = MetricsJson(report.overall);
  return j.dump(1, ' ') + "\n";
}

}  // namespace lrx
