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
// lrx: train, extract, eval, cluster and gen-corpus.
//
// Exit codes: 0 ok, 1 runtime error (synthesis failed), 2 usage or input
// error.

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "lrx/annotation_io.h"
#include "lrx/bundle.h"
#include "lrx/cluster.h"
#include "lrx/config.h"
#include "lrx/corpus.h"
#include "lrx/errors.h"
#include "lrx/eval.h"
#include "lrx/ingest.h"
#include "lrx/runtime.h"

namespace fs = std::filesystem;

namespace {

constexpr int kOk = 0;
constexpr int kRuntimeError = 1;
constexpr int kInputError = 2;

// Input problems the caller can fix; exit code 2.
class InputError : public lrx::Error {
 public:
  using lrx::Error::Error;
};

struct Common {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<double> threshold;
  std::vector<std::string> fields;
};

lrx::Config LoadConfigFor(const Common& c) {
  lrx::Config config = c.config_path.empty() ? lrx::DefaultConfig()
                                             : lrx::LoadConfig(c.config_path);
  if (c.seed) config.seed = *c.seed;
  if (c.threshold) config.threshold = *c.threshold;
  return config;
}

void RequireFile(const std::string& path) {
  if (!fs::is_regular_file(path)) throw InputError("no such file: " + path);
}

bool IsDocumentFile(const fs::path& p) {
  const std::string name = p.filename().string();
  if (name == "annotations.json" || name == "manifest.json") return false;
  const std::string ext = p.extension().string();
  return ext == ".html" || ext == ".htm" || ext == ".json";
}

// Files and directories; a directory with a manifest is read as a generated
// corpus, any other directory contributes its document files by name.
std::vector<lrx::Document> LoadDocuments(const std::vector<std::string>& inputs,
                                         const lrx::Config& config) {
  std::vector<lrx::Document> docs;
  for (const auto& in : inputs) {
    if (fs::is_directory(in)) {
      if (fs::is_regular_file(fs::path(in) / "manifest.json")) {
        for (auto& d : lrx::LoadCorpus(in).docs) docs.push_back(std::move(d));
        continue;
      }
      std::vector<fs::path> files;
      for (const auto& e : fs::directory_iterator(in)) {
        if (e.is_regular_file() && IsDocumentFile(e.path())) files.push_back(e.path());
      }
      std::sort(files.begin(), files.end());
      for (const auto& f : files) {
        docs.push_back(lrx::LoadDocument(f.string(), config.geometry.row_tolerance));
      }
    } else {
      RequireFile(in);
      docs.push_back(lrx::LoadDocument(in, config.geometry.row_tolerance));
    }
  }
  if (docs.empty()) throw InputError("no documents");
  for (const auto& d : docs) {
    if (d.kind() != docs.front().kind()) {
      throw InputError("inputs mix tree and box documents: " + docs.front().id + ", " + d.id);
    }
  }
  return docs;
}

lrx::AnnotationSet LoadAnnotations(const std::string& path) {
  RequireFile(path);
  return lrx::ParseAnnotations(lrx::ReadFile(path));
}

std::string Fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

void WriteReport(std::ostream& out, const lrx::SynthesisReport& rep,
                 const lrx::ExtractionProgram* prog) {
  out << "field " << rep.field << "\n";
  for (const auto& c : rep.clusters) {
    out << "  cluster " << c.id << " (" << c.docs.size() << " docs):";
    for (const auto& d : c.docs) out << " " << d;
    out << "\n";
    for (const auto& cand : c.candidates) {
      out << "    candidate '" << cand.ngram << "' score " << Fixed(cand.score)
          << " distance " << Fixed(cand.distance) << " size " << Fixed(cand.size)
          << "\n";
    }
    if (c.landmark.empty()) {
      out << "    failed: " << c.note << "\n";
    } else {
      out << "    landmark '" << c.landmark << "'" << (c.sound ? "" : " (unsound)")
          << (c.guarded ? " guarded" : "") << "\n";
    }
  }
  if (prog) {
    for (size_t i = 0; i < prog->tuples.size(); ++i) {
      const auto& t = prog->tuples[i];
      out << "  tuple " << i << ": landmark '" << t.landmark << "'\n"
          << "    region    " << lrx::ToString(t.region) << "\n"
          << "    value     " << lrx::ToString(t.value) << "\n"
          << "    blueprint " << lrx::ToString(t.blueprint) << "\n";
      if (t.guard) {
        out << "    guard     " << t.guard->tuples.size() << " tuple(s), landmark '"
            << t.guard->tuples.front().landmark << "'\n";
      }
    }
  }
  for (const auto& w : rep.warnings) out << "  warning: " << w << "\n";
}

std::string ErrorJson(const std::string& kind, const std::string& field,
                      const std::string& message) {
  nlohmann::ordered_json j;
  j["error"] = kind;
  if (!field.empty()) j["field"] = field;
  j["message"] = message;
  return j.dump();
}

int Train(const Common& c, const std::vector<std::string>& inputs,
          const std::string& annotations_path, const std::string& out,
          std::string report_path) {
  const lrx::Config config = LoadConfigFor(c);
  const auto docs = LoadDocuments(inputs, config);
  const auto anns = LoadAnnotations(annotations_path);
  std::vector<std::string> fields = c.fields.empty() ? lrx::FieldNames(anns) : c.fields;
  if (fields.empty()) throw InputError("annotations name no fields");

  lrx::Bundle bundle;
  std::ostringstream report;
  int failures = 0;
  for (const auto& field : fields) {
    lrx::SynthesisReport rep;
    try {
      bundle.programs.push_back(lrx::SynthesizeField(docs, anns, field, config, &rep));
      WriteReport(report, rep, &bundle.programs.back());
    } catch (const lrx::SynthesisError& e) {
      ++failures;
      rep.field = field;
      WriteReport(report, rep, nullptr);
      report << "  error: " << e.what() << "\n";
      std::cerr << ErrorJson("synthesis", field, e.what()) << "\n";
    }
  }
  std::sort(bundle.programs.begin(), bundle.programs.end(),
            [](const auto& a, const auto& b) { return a.field < b.field; });
  lrx::SaveBundle(bundle, out);
  if (report_path.empty()) report_path = out + ".report.txt";
  lrx::WriteFile(report_path, report.str());
  std::cerr << "trained " << bundle.programs.size() << " of " << fields.size()
            << " fields; report in " << report_path << "\n";
  return failures ? kRuntimeError : kOk;
}

int Extract(const Common& c, const std::vector<std::string>& inputs,
            const std::string& bundle_path, const std::string& out) {
  const lrx::Config config = LoadConfigFor(c);
  RequireFile(bundle_path);
  lrx::Bundle bundle = lrx::LoadBundle(bundle_path);
  if (!c.fields.empty()) {
    std::erase_if(bundle.programs, [&](const lrx::ExtractionProgram& p) {
      return std::find(c.fields.begin(), c.fields.end(), p.field) == c.fields.end();
    });
  }
  if (c.threshold) {
    for (auto& p : bundle.programs) p.threshold = *c.threshold;
  }
  const auto docs = LoadDocuments(inputs, config);

  std::vector<lrx::Prediction> preds(docs.size());
  std::vector<std::vector<std::string>> notes(docs.size());
  std::atomic<size_t> next{0};
  auto work = [&] {
    for (size_t i = next++; i < docs.size(); i = next++) {
      for (const auto& p : bundle.programs) {
        lrx::ExtractionTrace trace;
        preds[i][p.field] = lrx::Extract(docs[i], p, &trace);
        if (trace.matching_tuples.size() > 1) {
          notes[i].push_back(docs[i].id + ": " + std::to_string(trace.matching_tuples.size()) +
                             " tuples of " + p.field + " match; using tuple " +
                             std::to_string(trace.tuple));
        }
      }
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                                     static_cast<unsigned>(docs.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < n; ++t) pool.emplace_back(work);
  for (auto& t : pool) t.join();

  lrx::PredictionSet set;
  for (size_t i = 0; i < docs.size(); ++i) {
    if (set.count(docs[i].id)) throw InputError("duplicate document id " + docs[i].id);
    set[docs[i].id] = std::move(preds[i]);
    for (const auto& n : notes[i]) std::cerr << "note: " << n << "\n";
  }
  const std::string text = lrx::SerializePredictions(set);
  if (out.empty() || out == "-") {
    std::cout << text;
  } else {
    lrx::WriteFile(out, text);
  }
  return kOk;
}

int Eval(const std::string& predictions, const std::string& annotations,
         const std::string& out) {
  RequireFile(predictions);
  const auto preds = lrx::ParsePredictions(lrx::ReadFile(predictions));
  const auto gold = LoadAnnotations(annotations);
  const std::string text = lrx::SerializeReport(lrx::Evaluate(preds, gold));
  if (out.empty() || out == "-") {
    std::cout << text;
  } else {
    lrx::WriteFile(out, text);
  }
  return kOk;
}

int Cluster(const Common& c, const std::vector<std::string>& inputs,
            const std::string& annotations_path) {
  const lrx::Config config = LoadConfigFor(c);
  const auto docs = LoadDocuments(inputs, config);
  const auto anns = LoadAnnotations(annotations_path);
  std::vector<std::string> fields = c.fields.empty() ? lrx::FieldNames(anns) : c.fields;
  for (const auto& field : fields) {
    lrx::FieldExamples ex;
    for (const auto& d : docs) {
      auto it = anns.find(d.id);
      if (it == anns.end() || !it->second.count(field)) continue;
      ex.docs.push_back(&d);
      ex.annotations.push_back(&it->second.at(field));
    }
    std::cout << "field " << field << "\n";
    if (ex.docs.empty()) {
      std::cout << "  no annotated documents\n";
      continue;
    }
    const auto result = lrx::InferLandmarksAndCluster(ex, config);
    for (const auto* level : {&result.fine, &result.merged}) {
      std::cout << (level == &result.fine ? "  fine clusters\n" : "  merged clusters\n");
      for (const auto& cl : *level) {
        std::cout << "    " << cl.id << ":";
        for (int m : cl.members) std::cout << " " << ex.docs[m]->id;
        std::cout << "\n";
        for (const auto& cand : cl.candidates) {
          std::cout << "      '" << cand.ngram << "' " << Fixed(cand.score) << "\n";
        }
      }
    }
  }
  return kOk;
}

int GenCorpus(const std::string& tmpl, int count, std::uint64_t seed, int first_index,
              const std::string& perturbation, const std::string& target,
              const std::string& out) {
  lrx::CorpusOptions o;
  try {
    o.tmpl = lrx::ParseTemplate(tmpl);
    o.perturbation = lrx::ParsePerturbation(perturbation);
  } catch (const lrx::Error& e) {
    throw InputError(e.what());
  }
  if (count <= 0) throw InputError("--count must be positive");
  o.count = count;
  o.seed = seed;
  o.first_index = first_index;
  o.target_field = target;
  lrx::WriteCorpus(lrx::GenerateCorpus(o), out);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Landmark-based robust data extraction"};
  app.require_subcommand(1);
  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", common.config_path, "Configuration file (JSON)");
    sub->add_option("--seed", common.seed, "Random seed");
    sub->add_option("--threshold", common.threshold, "Blueprint distance threshold")
        ->check(CLI::Range(0.0, 1.0));
    sub->add_option("--field", common.fields, "Restrict to these fields");
  };

  std::vector<std::string> inputs;
  std::string annotations, bundle, out, report, predictions;

  auto* train = app.add_subcommand("train", "Synthesize extraction programs");
  add_common(train);
  train->add_option("docs", inputs, "Documents or directories")->required();
  train->add_option("--annotations,-a", annotations, "Annotation file")->required();
  train->add_option("--out,-o", out, "Bundle to write")->required();
  train->add_option("--report", report, "Synthesis report (default <out>.report.txt)");

  auto* extract = app.add_subcommand("extract", "Run a bundle over documents");
  add_common(extract);
  extract->add_option("docs", inputs, "Documents or directories")->required();
  extract->add_option("--bundle,-b", bundle, "Program bundle")->required();
  extract->add_option("--out,-o", out, "Predictions file (JSON lines; default stdout)");

  auto* eval = app.add_subcommand("eval", "Score predictions against gold annotations");
  eval->add_option("--predictions,-p", predictions, "Predictions file")->required();
  eval->add_option("--annotations,-a", annotations, "Gold annotation file")->required();
  eval->add_option("--out,-o", out, "Report file (default stdout)");

  auto* cluster = app.add_subcommand("cluster", "Show landmark candidates and clusters");
  add_common(cluster);
  cluster->add_option("docs", inputs, "Documents or directories")->required();
  cluster->add_option("--annotations,-a", annotations, "Annotation file")->required();

  std::string tmpl = "flights", perturbation = "none", target;
  int count = 5, first_index = 0;
  std::uint64_t gen_seed = 1;
  auto* gen = app.add_subcommand("gen-corpus", "Write a seeded synthetic corpus");
  gen->add_option("--template", tmpl, "flights or invoice");
  gen->add_option("--count", count, "Number of documents");
  gen->add_option("--seed", gen_seed, "Random seed");
  gen->add_option("--first-index", first_index, "Index of the first document");
  gen->add_option("--perturbation", perturbation,
                  "none, insert_section, permute_sections, duplicate_roi, remove_roi, "
                  "mutate_inside_roi, translate_boxes or ad_banner");
  gen->add_option("--field", target, "Target field of mutate_inside_roi");
  gen->add_option("--out,-o", out, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (train->parsed()) return Train(common, inputs, annotations, out, report);
    if (extract->parsed()) return Extract(common, inputs, bundle, out);
    if (eval->parsed()) return Eval(predictions, annotations, out);
    if (cluster->parsed()) return Cluster(common, inputs, annotations);
    if (gen->parsed()) {
      return GenCorpus(tmpl, count, gen_seed, first_index, perturbation, target, out);
    }
  } catch (const InputError& e) {
    std::cerr << ErrorJson("input", "", e.what()) << "\n";
    return kInputError;
  } catch (const lrx::ParseError& e) {
    std::cerr << ErrorJson("parse", "", e.what()) << "\n";
    return kInputError;
  } catch (const lrx::InvalidLocationError& e) {
    std::cerr << ErrorJson("location", "", e.what()) << "\n";
    return kInputError;
  } catch (const lrx::BundleError& e) {
    std::cerr << ErrorJson("bundle", "", e.what()) << "\n";
    return kInputError;
  } catch (const lrx::SynthesisError& e) {
    std::cerr << ErrorJson("synthesis", "", e.what()) << "\n";
    return kRuntimeError;
  } catch (const std::exception& e) {
    std::cerr << ErrorJson("runtime", "", e.what()) << "\n";
    return kRuntimeError;
  }
  return kInputError;
}
