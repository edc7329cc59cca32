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

#include <gtest/gtest.h>

#include "lrx/errors.h"
#include "test_util.h"

namespace lrx {
namespace {

// Ten documents, field "t" annotated on each with value "v<i>".
AnnotationSet Gold() {
  AnnotationSet g;
  for (int i = 0; i < 10; ++i) {
    g["d" + std::to_string(i)]["t"] = {{BoxIndex{0}}, {}, {"v" + std::to_string(i)}};
  }
  return g;
}

PredictionSet AllCorrect() {
  PredictionSet p;
  for (int i = 0; i < 10; ++i) {
    p["d" + std::to_string(i)]["t"] = FieldValue{"v" + std::to_string(i)};
  }
  return p;
}

double F1(double p, double r) { return p + r > 0 ? 2 * p * r / (p + r) : 0; }

TEST(Evaluate, AllCorrect) {
  const EvalReport r = Evaluate(AllCorrect(), Gold());
  const FieldMetrics& m = r.fields.at("t");
  EXPECT_EQ(m.correct, 10);
  EXPECT_DOUBLE_EQ(m.precision, 1.0);
  EXPECT_DOUBLE_EQ(m.recall, 1.0);
  EXPECT_DOUBLE_EQ(m.f1, 1.0);
}

TEST(Evaluate, OneWrongOfTen) {
  PredictionSet p = AllCorrect();
  p["d3"]["t"] = FieldValue{"wrong"};
  const FieldMetrics m = Evaluate(p, Gold()).fields.at("t");
  EXPECT_EQ(m.correct, 9);
  EXPECT_EQ(m.incorrect, 1);
  EXPECT_DOUBLE_EQ(m.precision, 0.9);
  EXPECT_DOUBLE_EQ(m.recall, 0.9);
  EXPECT_DOUBLE_EQ(m.f1, 0.9);
}

TEST(Evaluate, AbstentionLowersRecallOnly) {
  PredictionSet p = AllCorrect();
  p["d3"]["t"] = FieldValue{"wrong"};
  p["d7"]["t"] = std::nullopt;
  const FieldMetrics m = Evaluate(p, Gold()).fields.at("t");
  EXPECT_EQ(m.correct, 8);
  EXPECT_EQ(m.incorrect, 1);
  EXPECT_EQ(m.abstained, 1);
  EXPECT_EQ(m.gold, 10);
  EXPECT_DOUBLE_EQ(m.precision, 8.0 / 9.0);
  EXPECT_DOUBLE_EQ(m.recall, 8.0 / 10.0);
  EXPECT_DOUBLE_EQ(m.f1, F1(8.0 / 9.0, 0.8));
}

TEST(Evaluate, AllNull) {
  PredictionSet p;
  for (int i = 0; i < 10; ++i) p["d" + std::to_string(i)]["t"] = std::nullopt;
  const FieldMetrics m = Evaluate(p, Gold()).fields.at("t");
  EXPECT_EQ(m.abstained, 10);
  EXPECT_EQ(m.precision, 0);
  EXPECT_EQ(m.recall, 0);
  EXPECT_EQ(m.f1, 0);
}

TEST(Evaluate, PredictionWithoutGoldIsIncorrect) {
  PredictionSet p = AllCorrect();
  p["extra"]["t"] = FieldValue{"v"};
  const FieldMetrics m = Evaluate(p, Gold()).fields.at("t");
  EXPECT_EQ(m.incorrect, 1);
  EXPECT_EQ(m.gold, 10);
  EXPECT_DOUBLE_EQ(m.precision, 10.0 / 11.0);
  EXPECT_DOUBLE_EQ(m.recall, 1.0);
}

TEST(Evaluate, OverallSumsFields) {
  PredictionSet p = AllCorrect();
  AnnotationSet g = Gold();
  for (int i = 0; i < 4; ++i) {
    const std::string d = "d" + std::to_string(i);
    g[d]["u"] = {{BoxIndex{1}}, {}, {"x"}};
    p[d]["u"] = FieldValue{i == 0 ? "y" : "x"};
  }
  const EvalReport r = Evaluate(p, g);
  EXPECT_EQ(r.overall.correct, 13);
  EXPECT_EQ(r.overall.incorrect, 1);
  EXPECT_EQ(r.overall.gold, 14);
  EXPECT_DOUBLE_EQ(r.overall.precision, 13.0 / 14.0);
}

TEST(Evaluate, F1MatchesDefinitionOnRandomCounts) {
  testing::Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    FieldMetrics m;
    m.correct = testing::Uniform(rng, 0, 20);
    m.incorrect = testing::Uniform(rng, 0, 20);
    m.abstained = testing::Uniform(rng, 0, 20);
    m.gold = m.correct + m.abstained + testing::Uniform(rng, 0, 5);
    Finalize(m);
    const int predicted = m.correct + m.incorrect;
    const double p = predicted ? static_cast<double>(m.correct) / predicted : 0;
    const double r = m.gold ? static_cast<double>(m.correct) / m.gold : 0;
    EXPECT_DOUBLE_EQ(m.precision, p);
    EXPECT_DOUBLE_EQ(m.recall, r);
    EXPECT_NEAR(m.f1, F1(p, r), 1e-12);
  }
}

TEST(Predictions, RoundTrip) {
  PredictionSet p = AllCorrect();
  p["d1"]["list"] = FieldValue{"a", "b"};
  p["d2"]["t"] = std::nullopt;
  const std::string text = SerializePredictions(p);
  EXPECT_EQ(ParsePredictions(text), p);
  EXPECT_EQ(SerializePredictions(ParsePredictions(text)), text);
}

TEST(Predictions, NullIsExplicit) {
  PredictionSet p;
  p["a"]["t"] = std::nullopt;
  EXPECT_EQ(SerializePredictions(p), "{\"doc\":\"a\",\"fields\":{\"t\":null}}\n");
}

TEST(Predictions, ParseErrorsCarryLineOffsets) {
  const std::string good = "{\"doc\":\"a\",\"fields\":{}}\n";
  try {
    ParsePredictions(good + "{\"doc\":\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), good.size());
  }
  try {
    ParsePredictions(good + good + "{\"fields\":{}}\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 2 * good.size());
  }
  EXPECT_TRUE(ParsePredictions("\n  \n").empty());
}

TEST(Report, SerializationIsStable) {
  PredictionSet p = AllCorrect();
  p["d3"]["t"] = FieldValue{"wrong"};
  const std::string a = SerializeReport(Evaluate(p, Gold()));
  EXPECT_EQ(a, SerializeReport(Evaluate(p, Gold())));
  EXPECT_NE(a.find("\"t\""), std::string::npos);
  EXPECT_NE(a.find("\"overall\""), std::string::npos);
}

}  // namespace
}  // namespace lrx
