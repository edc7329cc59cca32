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
#include <regex>

#include <gtest/gtest.h>

#include "lrx/errors.h"
#include "lrx/pattern.h"
#include "test_util.h"

namespace lrx {
namespace {

using Spans = std::vector<std::pair<size_t, size_t>>;

Spans RegexSpans(const std::string& text, const std::regex& re) {
  Spans out;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), re);
       it != std::sregex_iterator(); ++it) {
    const size_t b = static_cast<size_t>(it->position(1));
    out.emplace_back(b, b + static_cast<size_t>(it->length(1)));
  }
  return out;
}

TEST(Pattern, NamesRoundTrip) {
  for (const auto& t : {PatternToken::Digits(13), PatternToken::Digits(0),
                        PatternToken::Of(TokenKind::kDate), PatternToken::Of(TokenKind::kTime),
                        PatternToken::Of(TokenKind::kUpperWord),
                        PatternToken::Of(TokenKind::kCurrency),
                        PatternToken::Of(TokenKind::kEndOfLine),
                        PatternToken::Literal("Qty")}) {
    EXPECT_EQ(PatternToken::Parse(t.Name()), t);
  }
  EXPECT_THROW(PatternToken::Parse("digits(x)"), ParseError);
  EXPECT_THROW(PatternToken::Parse("WORD"), ParseError);
}

TEST(Pattern, Examples) {
  const auto date = PatternToken::Of(TokenKind::kDate);
  EXPECT_EQ(date.Matches("Date: 12/03/2020"), (Spans{{6, 16}}));
  EXPECT_TRUE(date.MatchesWhole("2020-03-12"));
  EXPECT_FALSE(date.MatchesWhole("123/03/2020"));
  const auto time = PatternToken::Of(TokenKind::kTime);
  EXPECT_TRUE(time.MatchesWhole("8:18 PM"));
  EXPECT_TRUE(time.MatchesWhole("20:18:05"));
  EXPECT_FALSE(time.MatchesWhole("8:1"));
  const auto upper = PatternToken::Of(TokenKind::kUpperWord);
  EXPECT_EQ(upper.Matches("To Denver (DEN)"), (Spans{{11, 14}}));
  const auto cur = PatternToken::Of(TokenKind::kCurrency);
  EXPECT_TRUE(cur.MatchesWhole("$1,234.50"));
  EXPECT_TRUE(cur.MatchesWhole("12.50"));
  EXPECT_FALSE(cur.MatchesWhole("1250"));
  EXPECT_EQ(PatternToken::Literal("ab").Matches("abab a"), (Spans{{0, 2}, {2, 4}}));
}

TEST(Pattern, DigitRunsMatchRegexOracle) {
  testing::Rng r(31);
  const std::string alphabet = "0123456789aZ -/";
  for (int t = 0; t < 500; ++t) {
    std::string s;
    const int n = testing::Uniform(r, 0, 30);
    for (int i = 0; i < n; ++i) s += alphabet[r() % alphabet.size()];
    EXPECT_EQ(PatternToken::Digits(0).Matches(s), RegexSpans(s, std::regex("([0-9]+)")));
    const int len = testing::Uniform(r, 1, 4);
    Spans want;
    // Maximal runs of exactly `len` digits.
    for (size_t i = 0; i < s.size();) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
        ++i;
        continue;
      }
      size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (static_cast<int>(j - i) == len) want.emplace_back(i, j);
      i = j;
    }
    EXPECT_EQ(PatternToken::Digits(len).Matches(s), want);
  }
}

TEST(Pattern, UpperWordsMatchRegexOracle) {
  testing::Rng r(32);
  const std::string alphabet = "ABCab01 -(";
  const std::regex run("([A-Za-z0-9]+)");
  for (int t = 0; t < 500; ++t) {
    std::string s;
    const int n = testing::Uniform(r, 0, 25);
    for (int i = 0; i < n; ++i) s += alphabet[r() % alphabet.size()];
    Spans want;
    for (const auto& [b, e] : RegexSpans(s, run)) {
      const std::string w = s.substr(b, e - b);
      if (std::regex_match(w, std::regex("[A-Z0-9]*[A-Z][A-Z0-9]*"))) want.emplace_back(b, e);
    }
    EXPECT_EQ(PatternToken::Of(TokenKind::kUpperWord).Matches(s), want);
  }
}

TEST(Pattern, ProfileListsObservedDigitLengths) {
  auto p = ProfilePatterns({"VIN 12345", "9876543210123"});
  EXPECT_EQ(p[0], PatternToken::Digits(5));
  EXPECT_EQ(p[1], PatternToken::Digits(13));
  EXPECT_EQ(p[2], PatternToken::Of(TokenKind::kDate));
}

}  // namespace
}  // namespace lrx
