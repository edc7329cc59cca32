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
#include "lrx/bundle.h"

#include <nlohmann/json.hpp>

#include "lrx/annotation_io.h"
#include "lrx/errors.h"
#include "lrx/ingest.h"

namespace lrx {
namespace {

using nlohmann::ordered_json;

constexpr const char* kFormat = "lrx-bundle";

// --- writing ---------------------------------------------------------------

ordered_json TokenJson(const PatternToken& t) {
  ordered_json j;
  if (t.kind == TokenKind::kLiteral) {
    j["literal"] = t.literal;
  } else {
    j["pattern"] = t.Name();
  }
  return j;
}

ordered_json PositionJson(const TextPosition& p) {
  ordered_json j;
  j["token"] = TokenJson(p.token);
  j["k"] = p.k;
  j["after"] = p.after;
  return j;
}

ordered_json TextJson(const TextProgram& p) {
  ordered_json j;
  switch (p.kind) {
    case TextProgram::Kind::kIdentity:
      j["kind"] = "identity";
      break;
    case TextProgram::Kind::kExtract:
      j["kind"] = "extract";
      j["start"] = PositionJson(p.start);
      j["end"] = PositionJson(p.end);
      break;
    case TextProgram::Kind::kConcat:
      j["kind"] = "concat";
      j["parts"] = ordered_json::array();
      for (const auto& part : p.parts) j["parts"].push_back(TextJson(part));
      break;
  }
  return j;
}

const char* AtomKindName(SelectorAtom::Kind k) {
  switch (k) {
    case SelectorAtom::Kind::kTag: return "tag";
    case SelectorAtom::Kind::kClass: return "class";
    case SelectorAtom::Kind::kId: return "id";
    case SelectorAtom::Kind::kAttrContains: return "attr";
    case SelectorAtom::Kind::kNthChild: return "nth";
  }
  return "tag";
}

ordered_json SelectorJson(const NodeSelector& s) {
  ordered_json steps = ordered_json::array();
  for (const auto& step : s.steps) {
    ordered_json js;
    js["axis"] = step.axis == SelectorStep::Axis::kChildren ? "child" : "descendant";
    js["atoms"] = ordered_json::array();
    for (const auto& a : step.atoms) {
      ordered_json ja;
      ja["kind"] = AtomKindName(a.kind);
      if (a.kind == SelectorAtom::Kind::kNthChild) {
        ja["n"] = a.n;
      } else {
        if (a.kind == SelectorAtom::Kind::kAttrContains) ja["name"] = a.name;
        ja["value"] = a.value;
      }
      js["atoms"].push_back(std::move(ja));
    }
    steps.push_back(std::move(js));
  }
  return steps;
}

ordered_json MotionJson(const Motion& m) {
  ordered_json j;
  j["kind"] = m.kind == Motion::Kind::kAbsolute ? "abs" : "rel";
  j["dir"] = std::string(ToString(m.dir));
  if (m.kind == Motion::Kind::kAbsolute) {
    j["k"] = m.k;
  } else {
    j["pattern"] = TokenJson(m.pattern);
    j["inclusive"] = m.inclusive;
  }
  return j;
}

ordered_json RegionJson(const RegionProgram& r) {
  ordered_json j;
  if (const auto* h = std::get_if<HopsProgram>(&r)) {
    j["hops"] = {h->parent_hops, h->left, h->right};
    return j;
  }
  ordered_json paths = ordered_json::array();
  for (const auto& p : std::get<DisjunctProgram>(r).paths) {
    ordered_json jp = ordered_json::array();
    for (const auto& m : p.motions) jp.push_back(MotionJson(m));
    paths.push_back(std::move(jp));
  }
  j["disjunct"] = std::move(paths);
  return j;
}

const char* NeighborKindName(NeighborKind k) {
  switch (k) {
    case NeighborKind::kAbsent: return "absent";
    case NeighborKind::kFrequent: return "frequent";
    case NeighborKind::kVariable: return "variable";
  }
  return "absent";
}

ordered_json NeighborJson(const NeighborClass& n) {
  ordered_json j;
  j["kind"] = NeighborKindName(n.kind);
  if (n.kind == NeighborKind::kFrequent) j["ngram"] = n.ngram;
  return j;
}

ordered_json BlueprintJson(const Blueprint& bp) {
  ordered_json j;
  if (const auto* t = std::get_if<TreeBlueprint>(&bp)) {
    j["paths"] = ordered_json::array();
    for (const auto& p : t->paths) j["paths"].push_back(p);
    return j;
  }
  j["summaries"] = ordered_json::array();
  for (const auto& s : std::get<BoxBlueprint>(bp).summaries) {
    ordered_json js;
    js["ngram"] = s.ngram;
    js["top"] = NeighborJson(s.top);
    js["left"] = NeighborJson(s.left);
    js["right"] = NeighborJson(s.right);
    js["bottom"] = NeighborJson(s.bottom);
    j["summaries"].push_back(std::move(js));
  }
  return j;
}

ordered_json VocabularyJson(const CommonValueIndex& v) {
  ordered_json j;
  j["values"] = ordered_json::array();
  for (const auto& s : v.values) j["values"].push_back(s);
  j["ranked"] = ordered_json::array();
  for (const auto& [s, n] : v.ranked) j["ranked"].push_back({s, n});
  return j;
}

ordered_json ValueJson(const ValueProgram& v) {
  ordered_json j;
  if (const auto* t = std::get_if<TreeValueProgram>(&v)) {
    j["selector"] = SelectorJson(t->selector);
    j["text"] = TextJson(t->text);
  } else {
    j["text"] = TextJson(std::get<BoxValueProgram>(v).text);
  }
  return j;
}

ordered_json ProgramJson(const ExtractionProgram& p);

ordered_json TupleJson(const ExtractionTuple& t) {
  ordered_json j;
  j["landmark"] = t.landmark;
  j["region"] = RegionJson(t.region);
  j["blueprint"] = BlueprintJson(t.blueprint);
  j["vocabulary"] = VocabularyJson(t.vocabulary);
  j["value"] = ValueJson(t.value);
  if (t.guard) j["guard"] = ProgramJson(*t.guard);
  return j;
}

ordered_json ProgramJson(const ExtractionProgram& p) {
  ordered_json j;
  j["field"] = p.field;
  j["kind"] = std::string(ToString(p.kind));
  j["agg"] = {{"kind", std::string(ToString(p.agg.kind))},
              {"separator", p.agg.separator}};
  j["threshold"] = p.threshold;
  j["blueprint_options"] = {{"max_n", p.blueprint_options.max_n},
                            {"radius", p.blueprint_options.radius}};
  j["min_overlap"] = p.min_overlap;
  j["tuples"] = ordered_json::array();
  for (const auto& t : p.tuples) j["tuples"].push_back(TupleJson(t));
  return j;
}

// --- reading ---------------------------------------------------------------

PatternToken ReadToken(const ordered_json& j) {
  if (j.contains("literal")) return PatternToken::Literal(j.at("literal").get<std::string>());
  return PatternToken::Parse(j.at("pattern").get<std::string>());
}

TextPosition ReadPosition(const ordered_json& j) {
  return {ReadToken(j.at("token")), j.at("k").get<int>(), j.at("after").get<bool>()};
}

TextProgram ReadText(const ordered_json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "identity") return TextProgram::Identity();
  if (kind == "extract") {
    return TextProgram::Extract(ReadPosition(j.at("start")), ReadPosition(j.at("end")));
  }
  if (kind == "concat") {
    TextProgram p;
    p.kind = TextProgram::Kind::kConcat;
    for (const auto& part : j.at("parts")) p.parts.push_back(ReadText(part));
    return p;
  }
  throw BundleError("unknown text program kind '" + kind + "'");
}

NodeSelector ReadSelector(const ordered_json& j) {
  NodeSelector s;
  for (const auto& js : j) {
    SelectorStep step;
    const std::string axis = js.at("axis").get<std::string>();
    if (axis == "child") {
      step.axis = SelectorStep::Axis::kChildren;
    } else if (axis == "descendant") {
      step.axis = SelectorStep::Axis::kDescendants;
    } else {
      throw BundleError("unknown selector axis '" + axis + "'");
    }
    for (const auto& ja : js.at("atoms")) {
      SelectorAtom a;
      const std::string kind = ja.at("kind").get<std::string>();
      if (kind == "nth") {
        a.kind = SelectorAtom::Kind::kNthChild;
        a.n = ja.at("n").get<int>();
      } else {
        if (kind == "tag") a.kind = SelectorAtom::Kind::kTag;
        else if (kind == "class") a.kind = SelectorAtom::Kind::kClass;
        else if (kind == "id") a.kind = SelectorAtom::Kind::kId;
        else if (kind == "attr") a.kind = SelectorAtom::Kind::kAttrContains;
        else throw BundleError("unknown selector atom '" + kind + "'");
        if (a.kind == SelectorAtom::Kind::kAttrContains) a.name = ja.at("name").get<std::string>();
        a.value = ja.at("value").get<std::string>();
      }
      step.atoms.push_back(std::move(a));
    }
    s.steps.push_back(std::move(step));
  }
  return s;
}

Motion ReadMotion(const ordered_json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  const Direction dir = ParseDirection(j.at("dir").get<std::string>());
  if (kind == "abs") return Motion::Absolute(dir, j.at("k").get<int>());
  if (kind == "rel") {
    return Motion::Relative(dir, ReadToken(j.at("pattern")), j.at("inclusive").get<bool>());
  }
  throw BundleError("unknown motion kind '" + kind + "'");
}

RegionProgram ReadRegion(const ordered_json& j) {
  if (j.contains("hops")) {
    const auto& h = j.at("hops");
    return HopsProgram{h.at(0).get<int>(), h.at(1).get<int>(), h.at(2).get<int>()};
  }
  DisjunctProgram d;
  for (const auto& jp : j.at("disjunct")) {
    PathProgram p;
    for (const auto& jm : jp) p.motions.push_back(ReadMotion(jm));
    d.paths.push_back(std::move(p));
  }
  return d;
}

NeighborClass ReadNeighbor(const ordered_json& j) {
  NeighborClass n;
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "absent") {
    n.kind = NeighborKind::kAbsent;
  } else if (kind == "frequent") {
    n.kind = NeighborKind::kFrequent;
    n.ngram = j.at("ngram").get<std::string>();
  } else if (kind == "variable") {
    n.kind = NeighborKind::kVariable;
  } else {
    throw BundleError("unknown neighbor kind '" + kind + "'");
  }
  return n;
}

Blueprint ReadBlueprint(const ordered_json& j) {
  if (j.contains("paths")) {
    TreeBlueprint t;
    for (const auto& p : j.at("paths")) t.paths.insert(p.get<std::string>());
    return t;
  }
  BoxBlueprint b;
  for (const auto& js : j.at("summaries")) {
    b.summaries.push_back({js.at("ngram").get<std::string>(), ReadNeighbor(js.at("top")),
                           ReadNeighbor(js.at("left")), ReadNeighbor(js.at("right")),
                           ReadNeighbor(js.at("bottom"))});
  }
  return b;
}

CommonValueIndex ReadVocabulary(const ordered_json& j) {
  CommonValueIndex v;
  for (const auto& s : j.at("values")) v.values.insert(s.get<std::string>());
  for (const auto& r : j.at("ranked")) {
    v.ranked.emplace_back(r.at(0).get<std::string>(), r.at(1).get<int>());
  }
  return v;
}

ExtractionProgram ReadProgram(const ordered_json& j);

ExtractionTuple ReadTuple(const ordered_json& j, DocKind kind) {
  ExtractionTuple t;
  t.landmark = j.at("landmark").get<std::string>();
  t.region = ReadRegion(j.at("region"));
  t.blueprint = ReadBlueprint(j.at("blueprint"));
  t.vocabulary = ReadVocabulary(j.at("vocabulary"));
  const auto& jv = j.at("value");
  if (kind == DocKind::kTree) {
    t.value = TreeValueProgram{ReadSelector(jv.at("selector")), ReadText(jv.at("text"))};
  } else {
    t.value = BoxValueProgram{ReadText(jv.at("text"))};
  }
  const bool tree_region = std::holds_alternative<HopsProgram>(t.region);
  const bool tree_bp = std::holds_alternative<TreeBlueprint>(t.blueprint);
  if (tree_region != (kind == DocKind::kTree) || tree_bp != (kind == DocKind::kTree)) {
    throw BundleError("tuple for '" + t.landmark + "' mixes tree and box parts");
  }
  if (j.contains("guard")) {
    t.guard = std::make_shared<const ExtractionProgram>(ReadProgram(j.at("guard")));
  }
  return t;
}

ExtractionProgram ReadProgram(const ordered_json& j) {
  ExtractionProgram p;
  p.field = j.at("field").get<std::string>();
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "tree") {
    p.kind = DocKind::kTree;
  } else if (kind == "box") {
    p.kind = DocKind::kBox;
  } else {
    throw BundleError("unknown document kind '" + kind + "'");
  }
  p.agg.kind = ParseAggKind(j.at("agg").at("kind").get<std::string>());
  p.agg.separator = j.at("agg").at("separator").get<std::string>();
  p.threshold = j.at("threshold").get<double>();
  p.blueprint_options.max_n = j.at("blueprint_options").at("max_n").get<int>();
  p.blueprint_options.radius = j.at("blueprint_options").at("radius").get<double>();
  p.min_overlap = j.at("min_overlap").get<double>();
  for (const auto& t : j.at("tuples")) p.tuples.push_back(ReadTuple(t, p.kind));
  return p;
}

}  // namespace

const ExtractionProgram* Bundle::Find(const std::string& field) const {
  for (const auto& p : programs) {
    if (p.field == field) return &p;
  }
  return nullptr;
}

std::string SerializeBundle(const Bundle& bundle) {
  ordered_json j;
  j["format"] = kFormat;
  j["version"] = kBundleVersion;
  j["programs"] = ordered_json::array();
  for (const auto& p : bundle.programs) j["programs"].push_back(ProgramJson(p));
  return j.dump(1, ' ') + "\n";
}

Bundle ParseBundle(std::string_view bytes) {
  ordered_json j;
  try {
    j = ordered_json::parse(bytes);
  } catch (const nlohmann::json::parse_error& e) {
    throw BundleError(std::string("corrupt bundle: ") + e.what());
  }
  try {
    if (!j.is_object() || j.value("format", "") != kFormat) {
      throw BundleError("not an lrx bundle");
    }
    const int version = j.at("version").get<int>();
    if (version != kBundleVersion) {
      throw BundleError("unsupported bundle version " + std::to_string(version) +
                        " (expected " + std::to_string(kBundleVersion) + ")");
    }
    Bundle b;
    for (const auto& p : j.at("programs")) b.programs.push_back(ReadProgram(p));
    return b;
  } catch (const BundleError&) {
    throw;
  } catch (const std::exception& e) {
    throw BundleError(std::string("corrupt bundle: ") + e.what());
  }
}

void SaveBundle(const Bundle& bundle, const std::string& path) {
  WriteFile(path, SerializeBundle(bundle));
}

Bundle LoadBundle(const std::string& path) { return ParseBundle(ReadFile(path)); }

Prediction ExtractAll(const Document& doc, const Bundle& bundle) {
  Prediction out;
  for (const auto& p : bundle.programs) out[p.field] = Extract(doc, p);
  return out;
}

}  // namespace lrx
