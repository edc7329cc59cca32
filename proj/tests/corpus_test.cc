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

#include "lrx/corpus.h"

#include <gtest/gtest.h>

#include <filesystem>

#include "lrx/errors.h"
#include "lrx/ingest.h"
#include "test_util.h"

namespace lrx {
namespace {

namespace fs = std::filesystem;

CorpusOptions Options(Template t, Perturbation p = Perturbation::kNone, int count = 12,
                      std::uint64_t seed = 17) {
  CorpusOptions o;
  o.tmpl = t;
  o.count = count;
  o.seed = seed;
  o.perturbation = p;
  return o;
}

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& name)
      : path(fs::temp_directory_path() / ("lrx_corpus_test_" + name)) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

std::map<std::string, std::string> Files(const fs::path& dir) {
  std::map<std::string, std::string> out;
  for (const auto& e : fs::directory_iterator(dir)) {
    out[e.path().filename().string()] = ReadFile(e.path().string());
  }
  return out;
}

// Subtrees whose class attribute is `cls`, in pre-order.
void Sections(const TreeNode& n, const std::string& cls, std::vector<TreeNode>& out) {
  auto it = n.attributes.find("class");
  if (it != n.attributes.end() && it->second == cls) out.push_back(n);
  for (const auto& c : n.children) Sections(c, cls, out);
}

std::vector<TreeNode> Sections(const Document& d, const std::string& cls) {
  std::vector<TreeNode> out;
  Sections(d.tree().root(), cls, out);
  return out;
}

TEST(Corpus, NamesRoundTrip) {
  for (Template t : {Template::kFlights, Template::kInvoice}) {
    EXPECT_EQ(ParseTemplate(ToString(t)), t);
  }
  for (Perturbation p :
       {Perturbation::kNone, Perturbation::kInsertSectionOutsideRoi,
        Perturbation::kPermuteSections, Perturbation::kDuplicateRoi, Perturbation::kRemoveRoi,
        Perturbation::kMutateInsideRoi, Perturbation::kTranslateBoxes,
        Perturbation::kInsertAdBanner}) {
    EXPECT_EQ(ParsePerturbation(ToString(p)), p);
  }
  EXPECT_EQ(ToString(Perturbation::kInsertSectionOutsideRoi), "insert_section");
  EXPECT_THROW(ParseTemplate("receipts"), Error);
  EXPECT_THROW(ParsePerturbation("shuffle"), Error);
}

TEST(Corpus, SameSeedSameBytes) {
  for (Template t : {Template::kFlights, Template::kInvoice}) {
    TempDir a("a"), b("b");
    WriteCorpus(GenerateCorpus(Options(t, Perturbation::kInsertAdBanner)), a.path.string());
    WriteCorpus(GenerateCorpus(Options(t, Perturbation::kInsertAdBanner)), b.path.string());
    const auto fa = Files(a.path);
    EXPECT_EQ(fa, Files(b.path));
    EXPECT_EQ(fa.size(), 12u + 2u);
  }
}

TEST(Corpus, DifferentSeedsDiffer) {
  const Corpus a = GenerateCorpus(Options(Template::kFlights));
  const Corpus b = GenerateCorpus(Options(Template::kFlights, Perturbation::kNone, 12, 18));
  EXPECT_NE(a.annotations.begin()->second.at("passenger").values,
            b.annotations.begin()->second.at("passenger").values);
}

TEST(Corpus, AnnotationsMatchDocumentData) {
  for (Template t : {Template::kFlights, Template::kInvoice}) {
    const Corpus c = GenerateCorpus(Options(t));
    ASSERT_EQ(c.docs.size(), 12u);
    for (const auto& d : c.docs) {
      const auto& anns = c.annotations.at(d.id);
      EXPECT_EQ(anns.size(), TemplateFields(t).size()) << d.id;
      for (const auto& [field, a] : anns) {
        EXPECT_NO_THROW(a.Validate());
        const auto per = a.PerLocationValues(d);
        ASSERT_EQ(per.size(), a.locations.size());
        for (size_t i = 0; i < per.size(); ++i) {
          EXPECT_NE(DataAt(d, a.locations[i]).find(per[i]), std::string::npos)
              << d.id << " " << field;
        }
      }
    }
  }
}

TEST(Corpus, InsertSectionKeepsRoiSubtreesIdentical) {
  const Corpus base = GenerateCorpus(Options(Template::kFlights));
  const Corpus moved =
      GenerateCorpus(Options(Template::kFlights, Perturbation::kInsertSectionOutsideRoi));
  for (size_t i = 0; i < base.docs.size(); ++i) {
    EXPECT_EQ(Sections(moved.docs[i], "leg"), Sections(base.docs[i], "leg"));
    EXPECT_EQ(Sections(moved.docs[i], "summary"), Sections(base.docs[i], "summary"));
    EXPECT_EQ(Sections(moved.docs[i], "promo").size(), 1u);
    EXPECT_EQ(moved.docs[i].tree().size(), base.docs[i].tree().size() + 6);
    for (const auto& [field, a] : base.annotations.at(base.docs[i].id)) {
      EXPECT_EQ(moved.annotations.at(moved.docs[i].id).at(field).values, a.values);
    }
  }
}

TEST(Corpus, DuplicateRoiAddsOneInstance) {
  for (Template t : {Template::kFlights, Template::kInvoice}) {
    const Corpus base = GenerateCorpus(Options(t));
    const Corpus dup = GenerateCorpus(Options(t, Perturbation::kDuplicateRoi));
    const std::string probe = t == Template::kFlights ? "depart_time" : "part_no";
    int doubled = 0;
    for (size_t i = 0; i < base.docs.size(); ++i) {
      const auto& a = base.annotations.at(base.docs[i].id).at(probe);
      const auto& b = dup.annotations.at(dup.docs[i].id).at(probe);
      EXPECT_EQ(b.locations.size(), a.locations.size() + 1);
      if (a.locations.size() == 1) {
        EXPECT_EQ(b.locations.size(), 2u);
        EXPECT_EQ(b.values[0], b.values[1]);
        ++doubled;
      }
    }
    if (t == Template::kFlights) EXPECT_GT(doubled, 0);
  }
}

TEST(Corpus, RemoveRoiKeepsOneInstance) {
  const Corpus base = GenerateCorpus(Options(Template::kFlights));
  const Corpus rm = GenerateCorpus(Options(Template::kFlights, Perturbation::kRemoveRoi));
  for (size_t i = 0; i < base.docs.size(); ++i) {
    const size_t n = base.annotations.at(base.docs[i].id).at("flight_number").locations.size();
    const size_t m = rm.annotations.at(rm.docs[i].id).at("flight_number").locations.size();
    EXPECT_EQ(m, std::max<size_t>(1, n - 1));
  }
}

TEST(Corpus, TranslateMovesEveryBoxTogether) {
  const Corpus base = GenerateCorpus(Options(Template::kInvoice));
  const Corpus moved = GenerateCorpus(Options(Template::kInvoice, Perturbation::kTranslateBoxes));
  for (size_t i = 0; i < base.docs.size(); ++i) {
    const auto& a = base.docs[i].boxes().boxes();
    const auto& b = moved.docs[i].boxes().boxes();
    ASSERT_EQ(a.size(), b.size());
    const double dx = b[0].x - a[0].x, dy = b[0].y - a[0].y;
    EXPECT_GT(dx, 0);
    for (size_t k = 0; k < a.size(); ++k) {
      EXPECT_EQ(b[k].text, a[k].text);
      EXPECT_DOUBLE_EQ(b[k].x - a[k].x, dx);
      EXPECT_DOUBLE_EQ(b[k].y - a[k].y, dy);
    }
  }
}

TEST(Corpus, MutateInsideRoiRecordsTarget) {
  for (Template t : {Template::kFlights, Template::kInvoice}) {
    CorpusOptions o = Options(t, Perturbation::kMutateInsideRoi);
    const Corpus c = GenerateCorpus(o);
    for (const auto& e : c.entries) EXPECT_FALSE(e.target_field.empty());
    o.target_field = TemplateFields(t).front().name;
    for (const auto& e : GenerateCorpus(o).entries) EXPECT_EQ(e.target_field, o.target_field);
  }
}

TEST(Corpus, WriteLoadRoundTrip) {
  for (Template t : {Template::kFlights, Template::kInvoice}) {
    const Corpus c = GenerateCorpus(Options(t, Perturbation::kMutateInsideRoi, 6));
    TempDir dir("rt");
    WriteCorpus(c, dir.path.string());
    const Corpus back = LoadCorpus(dir.path.string());
    ASSERT_EQ(back.docs.size(), c.docs.size());
    for (size_t i = 0; i < c.docs.size(); ++i) {
      EXPECT_EQ(back.docs[i].id, c.docs[i].id);
      EXPECT_EQ(back.docs[i].content, c.docs[i].content);
      EXPECT_EQ(back.entries[i].target_field, c.entries[i].target_field);
      EXPECT_EQ(back.entries[i].layout, c.entries[i].layout);
    }
    EXPECT_EQ(back.annotations, c.annotations);
  }
}

TEST(Corpus, FirstIndexContinuesTheSequence) {
  CorpusOptions o = Options(Template::kInvoice);
  const Corpus all = GenerateCorpus(o);
  o.first_index = 5;
  o.count = 7;
  const Corpus tail = GenerateCorpus(o);
  for (int i = 0; i < 7; ++i) {
    EXPECT_EQ(tail.docs[i].id, all.docs[i + 5].id);
    EXPECT_EQ(tail.docs[i].content, all.docs[i + 5].content);
  }
}

}  // namespace
}  // namespace lrx
