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
#include "lrx/runtime.h"

#include <algorithm>
#include <set>

#include "lrx/errors.h"
#include "lrx/roi.h"
#include "lrx/text.h"

namespace lrx {
namespace {

// Lazily built per-document state shared by the tuples of one extraction.
class DocContext {
 public:
  explicit DocContext(const Document& doc) : doc_(doc) {}

  const Document& doc() const { return doc_; }
  const NeighborTable& table(double min_overlap) {
    if (!table_) table_ = std::make_unique<NeighborTable>(doc_.boxes(), min_overlap);
    return *table_;
  }

 private:
  const Document& doc_;
  std::unique_ptr<NeighborTable> table_;
};

std::optional<FieldValue> ExtractImpl(DocContext& ctx,
                                      const ExtractionProgram& prog,
                                      ExtractionTrace* trace, bool run_all);

// Runs the tuple from the given occurrences only.
TupleOutput RunFrom(const ExtractionProgram& prog, const ExtractionTuple& tuple,
                    DocContext& ctx, const std::vector<Location>& occs) {
  TupleOutput out;
  const Document& doc = ctx.doc();
  std::set<int> seen;
  auto push = [&](int source, std::string value) {
    if (!seen.insert(source).second) return;
    out.sources.push_back(source);
    out.values.push_back(std::move(value));
  };
  if (doc.kind() == DocKind::kTree) {
    const TreeDocument& t = doc.tree();
    const auto* hops = std::get_if<HopsProgram>(&tuple.region);
    const auto* value = std::get_if<TreeValueProgram>(&tuple.value);
    if (!hops || !value) throw Error("tuple does not fit a tree document");
    for (const auto& occ : occs) {
      ++out.occurrences;
      auto region = ExecHops(t, ResolveNode(t, occ), *hops);
      if (!region) continue;
      if (Delta(Blueprint(BlueprintTree(*region, t, tuple.vocabulary)),
                tuple.blueprint) > prog.threshold) {
        ++out.gated;
        continue;
      }
      std::vector<std::pair<int, std::string>> got;
      bool ok = true;
      for (NodeId n : EvalSelector(value->selector, t, *region)) {
        auto v = ExecText(value->text, t.data(n));
        if (!v) {
          ok = false;
          break;
        }
        got.emplace_back(n, std::move(*v));
      }
      if (!ok) continue;
      for (auto& [n, v] : got) push(n, std::move(v));
    }
    return out;
  }
  const BoxDocument& b = doc.boxes();
  const auto* disjunct = std::get_if<DisjunctProgram>(&tuple.region);
  const auto* value = std::get_if<BoxValueProgram>(&tuple.value);
  if (!disjunct || !value) throw Error("tuple does not fit a box document");
  const NeighborTable& table = ctx.table(prog.min_overlap);
  for (const auto& occ : occs) {
    ++out.occurrences;
    auto region = ExecDisjunct(table, ResolveBox(b, occ), *disjunct);
    if (!region) continue;
    const Blueprint bp = BlueprintBox(*region, b, tuple.vocabulary,
                                      prog.blueprint_options.max_n,
                                      prog.blueprint_options.radius);
    if (Delta(bp, tuple.blueprint) > prog.threshold) {
      ++out.gated;
      continue;
    }
    auto v = ExecText(value->text, RegionText(b, *region));
    if (v) push(region->boxes.back(), std::move(*v));
  }
  return out;
}

std::vector<Location> Occurrences(const ExtractionTuple& tuple, DocContext& ctx) {
  std::vector<Location> occs = Locate(ctx.doc(), tuple.landmark);
  if (!tuple.guard || ctx.doc().kind() != DocKind::kTree) return occs;
  ExtractionTrace gt;
  ExtractImpl(ctx, *tuple.guard, &gt, false);
  const std::set<int> allowed(gt.sources.begin(), gt.sources.end());
  const TreeDocument& t = ctx.doc().tree();
  std::vector<Location> kept;
  for (auto& o : occs) {
    if (allowed.count(ResolveNode(t, o))) kept.push_back(std::move(o));
  }
  return kept;
}

std::optional<FieldValue> ExtractImpl(DocContext& ctx,
                                      const ExtractionProgram& prog,
                                      ExtractionTrace* trace, bool run_all) {
  std::optional<FieldValue> result;
  bool decided = false;
  for (size_t i = 0; i < prog.tuples.size(); ++i) {
    const ExtractionTuple& tuple = prog.tuples[i];
    TupleOutput out = RunFrom(prog, tuple, ctx, Occurrences(tuple, ctx));
    if (out.values.empty()) continue;
    if (trace) trace->matching_tuples.push_back(static_cast<int>(i));
    if (!decided) {
      decided = true;
      if (trace) {
        trace->tuple = static_cast<int>(i);
        trace->sources = out.sources;
      }
      result = Aggregate(prog.agg, std::move(out.values));
    }
    if (!run_all) break;
  }
  return result;
}

bool Reproduces(const ExtractionProgram& prog, const FieldExamples& ex,
                const std::vector<int>& members) {
  for (int m : members) {
    auto got = Extract(*ex.docs[m], prog);
    if (!got || *got != ex.annotations[m]->values) return false;
  }
  return true;
}

std::set<std::string> AnnotatedStrings(const Document& doc, const Annotation& a) {
  std::set<std::string> out(a.values.begin(), a.values.end());
  for (auto& v : a.PerLocationValues(doc)) out.insert(std::move(v));
  return out;
}

// A guard selecting the landmark occurrences whose output stays inside the
// annotation; nullptr when no occurrence strays.
std::shared_ptr<const ExtractionProgram> SynthesizeGuard(
    const ExtractionProgram& single, const FieldExamples& ex,
    const std::vector<int>& members, const Config& config) {
  const ExtractionTuple& tuple = single.tuples.front();
  std::vector<Annotation> guard_ann;
  std::vector<const Document*> guard_docs;
  guard_ann.reserve(members.size());
  bool strays = false;
  for (int m : members) {
    const Document& doc = *ex.docs[m];
    const TreeDocument& t = doc.tree();
    const std::set<std::string> allowed = AnnotatedStrings(doc, *ex.annotations[m]);
    DocContext ctx(doc);
    Annotation a;
    a.agg.kind = AggKind::kOrderedList;
    for (const auto& occ : Locate(doc, tuple.landmark)) {
      TupleOutput out = RunFrom(single, tuple, ctx, {occ});
      if (out.values.empty()) continue;
      const bool inside = std::all_of(out.values.begin(), out.values.end(),
                                      [&](const std::string& v) { return allowed.count(v); });
      if (!inside) {
        strays = true;
        continue;
      }
      const NodeId n = ResolveNode(t, occ);
      a.locations.push_back(t.PathOf(n));
      a.values.push_back(t.data(n));
    }
    if (a.locations.empty()) continue;
    guard_ann.push_back(std::move(a));
    guard_docs.push_back(&doc);
  }
  if (!strays || guard_docs.empty()) return nullptr;
  FieldExamples gex;
  gex.docs = guard_docs;
  for (const auto& a : guard_ann) gex.annotations.push_back(&a);
  Config gconfig = config;
  gconfig.guard_depth = config.guard_depth - 1;
  return std::make_shared<const ExtractionProgram>(
      SynthesizeField(gex, single.field + "#guard", gconfig));
}

}  // namespace

std::string ToString(const RegionProgram& p) {
  return std::visit([](const auto& x) { return ToString(x); }, p);
}

bool operator==(const ExtractionTuple& a, const ExtractionTuple& b) {
  if (!(a.landmark == b.landmark && a.region == b.region &&
        a.blueprint == b.blueprint && a.vocabulary == b.vocabulary &&
        a.value == b.value)) {
    return false;
  }
  if (!a.guard || !b.guard) return !a.guard && !b.guard;
  return *a.guard == *b.guard;
}

bool operator==(const ExtractionProgram& a, const ExtractionProgram& b) {
  return a.field == b.field && a.kind == b.kind && a.agg == b.agg &&
         a.threshold == b.threshold &&
         a.blueprint_options.max_n == b.blueprint_options.max_n &&
         a.blueprint_options.radius == b.blueprint_options.radius &&
         a.min_overlap == b.min_overlap && a.tuples == b.tuples;
}

TupleOutput RunTuple(const ExtractionProgram& prog, const ExtractionTuple& tuple,
                     const Document& doc) {
  DocContext ctx(doc);
  return RunFrom(prog, tuple, ctx, Occurrences(tuple, ctx));
}

std::optional<FieldValue> Extract(const Document& doc,
                                  const ExtractionProgram& prog,
                                  ExtractionTrace* trace) {
  if (doc.kind() != prog.kind) return std::nullopt;
  DocContext ctx(doc);
  return ExtractImpl(ctx, prog, trace, trace != nullptr);
}

ExtractionTuple SynthesizeTuple(const FieldExamples& ex,
                                const std::vector<int>& members,
                                const std::string& landmark,
                                const Aggregation& agg,
                                const CommonValueIndex& vocabulary,
                                const Config& config,
                                std::vector<std::string>* warnings) {
  struct Inst {
    int doc;
    RoiInstance roi;
  };
  std::vector<Inst> insts;
  for (int m : members) {
    const Document& doc = *ex.docs[m];
    auto found = AssignInstances(doc, *ex.annotations[m], Locate(doc, landmark));
    if (found.empty()) {
      throw SynthesisError("landmark '" + landmark + "' missing from " + doc.id);
    }
    for (auto& r : found) insts.push_back({m, std::move(r)});
  }

  ExtractionTuple tuple;
  tuple.landmark = landmark;
  tuple.vocabulary = vocabulary;
  const BlueprintOptions bpo{config.scoring.max_n, config.geometry.summary_radius};
  std::vector<Blueprint> bps;
  std::vector<ValueExample> vex;

  if (ex.kind() == DocKind::kTree) {
    std::vector<HopsExample> hx;
    for (const auto& in : insts) {
      const TreeDocument& t = ex.docs[in.doc]->tree();
      HopsExample h{&t, ResolveNode(t, in.roi.landmark), {}};
      for (const auto& l : in.roi.locations) h.values.push_back(ResolveNode(t, l));
      hx.push_back(std::move(h));
    }
    const HopsProgram hops = ReconcileHopsOnDocs(hx);
    tuple.region = hops;
    for (size_t i = 0; i < insts.size(); ++i) {
      const TreeDocument& t = *hx[i].doc;
      auto region = ExecHops(t, hx[i].landmark, hops);
      if (!region) {
        throw SynthesisError("region program " + ToString(hops) +
                             " fails on " + ex.docs[insts[i].doc]->id);
      }
      bps.push_back(BlueprintTree(*region, t, vocabulary));
      vex.push_back({ex.docs[insts[i].doc], *region, insts[i].roi.locations,
                     insts[i].roi.values});
    }
  } else {
    std::vector<std::unique_ptr<NeighborTable>> tables(ex.docs.size());
    std::vector<std::string> samples;
    for (int m : members) {
      const BoxDocument& b = ex.docs[m]->boxes();
      tables[m] = std::make_unique<NeighborTable>(b, config.geometry.min_overlap);
      for (const auto& box : b.boxes()) samples.push_back(box.text);
    }
    std::vector<PathExample> px;
    for (const auto& in : insts) {
      const BoxDocument& b = ex.docs[in.doc]->boxes();
      PathExample p{tables[in.doc].get(), ResolveBox(b, in.roi.landmark), {}};
      for (const auto& l : in.roi.locations) p.annotated.push_back(ResolveBox(b, l));
      px.push_back(std::move(p));
    }
    DisjunctionResult res =
        SynthesizeBoxRegion(px, ProfilePatterns(samples), config.enumeration,
                            config.seed + static_cast<std::uint64_t>(members.front()));
    if (res.covered_count == 0) {
      throw SynthesisError("no region program covers an instance of '" +
                           landmark + "'");
    }
    if (warnings && res.covered_count < static_cast<int>(px.size())) {
      warnings->push_back("region program for '" + landmark + "' covers " +
                          std::to_string(res.covered_count) + " of " +
                          std::to_string(px.size()) + " instances");
    }
    tuple.region = res.program;
    for (size_t i = 0; i < px.size(); ++i) {
      if (!res.covered[i]) continue;
      auto region = ExecDisjunct(*px[i].table, px[i].landmark, res.program);
      if (!region) continue;
      const BoxDocument& b = ex.docs[insts[i].doc]->boxes();
      bps.push_back(BlueprintBox(*region, b, vocabulary, bpo.max_n, bpo.radius));
      vex.push_back({ex.docs[insts[i].doc], *region, insts[i].roi.locations,
                     {JoinedValue(insts[i].roi, agg)}});
    }
  }
  tuple.blueprint = ModeBlueprint(bps);
  tuple.value = SynthesizeValue(vex, config.selectors);
  return tuple;
}

ExtractionProgram SynthesizeField(const FieldExamples& ex,
                                  const std::string& field,
                                  const Config& config,
                                  SynthesisReport* report) {
  if (ex.docs.empty()) throw SynthesisError("no annotated documents for " + field);
  for (const Document* d : ex.docs) {
    if (d->kind() != ex.kind()) throw Error("tree and box documents cannot share a field");
  }
  SynthesisReport local;
  SynthesisReport& rep = report ? *report : local;
  rep.field = field;

  ExtractionProgram prog;
  prog.field = field;
  prog.kind = ex.kind();
  prog.agg = ex.annotations.front()->agg;
  prog.threshold = config.threshold;
  prog.blueprint_options = {config.scoring.max_n, config.geometry.summary_radius};
  prog.min_overlap = config.geometry.min_overlap;

  ClusteringResult clustering = InferLandmarksAndCluster(ex, config);
  std::vector<Cluster> clusters = clustering.merged;
  std::stable_sort(clusters.begin(), clusters.end(),
                   [](const Cluster& a, const Cluster& b) {
                     if (a.members.size() != b.members.size()) {
                       return a.members.size() > b.members.size();
                     }
                     return a.id < b.id;
                   });
  const CommonValueIndex vocab = TrainingVocabulary(ex.docs, config);

  for (const Cluster& c : clusters) {
    ClusterReport cr;
    cr.id = c.id;
    for (int m : c.members) cr.docs.push_back(ex.docs[m]->id);
    cr.candidates = c.candidates;
    if (c.candidates.empty()) cr.note = "no landmark candidate";

    std::optional<ExtractionTuple> fallback;
    for (const auto& cand : c.candidates) {
      ExtractionProgram single = prog;
      try {
        single.tuples = {SynthesizeTuple(ex, c.members, cand.ngram, prog.agg,
                                         vocab, config, &rep.warnings)};
      } catch (const SynthesisError& e) {
        if (!cr.note.empty()) cr.note += "; ";
        cr.note += e.what();
        continue;
      }
      bool sound = Reproduces(single, ex, c.members);
      if (!sound && prog.kind == DocKind::kTree && config.guard_depth > 0) {
        try {
          auto guard = SynthesizeGuard(single, ex, c.members, config);
          if (guard) {
            ExtractionProgram guarded = single;
            guarded.tuples.front().guard = guard;
            if (Reproduces(guarded, ex, c.members)) {
              single = std::move(guarded);
              sound = true;
              cr.guarded = true;
            }
          }
        } catch (const SynthesisError& e) {
          rep.warnings.push_back("guard for '" + cand.ngram + "' failed: " + e.what());
        }
      }
      if (sound) {
        cr.landmark = cand.ngram;
        cr.sound = true;
        prog.tuples.push_back(std::move(single.tuples.front()));
        fallback.reset();
        break;
      }
      if (!fallback) {
        fallback = std::move(single.tuples.front());
        cr.landmark = cand.ngram;
      }
    }
    if (fallback) {
      rep.warnings.push_back("cluster " + std::to_string(c.id) + " of " + field +
                             ": no candidate reproduces every annotation");
      prog.tuples.push_back(std::move(*fallback));
    }
    if (cr.landmark.empty()) {
      rep.warnings.push_back("cluster " + std::to_string(c.id) + " of " + field +
                             " skipped: " + cr.note);
    }
    rep.clusters.push_back(std::move(cr));
  }
  if (prog.tuples.empty()) {
    throw SynthesisError("no cluster of field '" + field + "' yields a program");
  }
  return prog;
}

ExtractionProgram SynthesizeField(const std::vector<Document>& docs,
                                  const AnnotationSet& annotations,
                                  const std::string& field,
                                  const Config& config,
                                  SynthesisReport* report) {
  FieldExamples ex;
  for (const auto& doc : docs) {
    auto d = annotations.find(doc.id);
    if (d == annotations.end()) continue;
    auto f = d->second.find(field);
    if (f == d->second.end()) continue;
    ex.docs.push_back(&doc);
    ex.annotations.push_back(&f->second);
  }
  return SynthesizeField(ex, field, config, report);
}

}  // namespace lrx
