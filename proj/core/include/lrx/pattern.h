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
// Pattern tokens shared by box motions and text positions.

#ifndef LRX_PATTERN_H_
#define LRX_PATTERN_H_

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lrx {

enum class TokenKind {
  kDigits,     // maximal digit run; length 0 means any length
  kDate,       // 12/03/2020, 3-4-21, 2020-03-12
  kTime,       // 8:18, 8:18 PM, 20:18:05
  kUpperWord,  // maximal run of capitals and digits holding a capital
  kAlnum,      // maximal run of letters and digits
  kCurrency,   // $1,234.50, 12.50 (needs a symbol or two decimals)
  kStartOfLine,
  kEndOfLine,
  kLiteral,
};

struct PatternToken {
  TokenKind kind = TokenKind::kAlnum;
  int length = 0;       // kDigits only
  std::string literal;  // kLiteral only

  static PatternToken Digits(int n) { return {TokenKind::kDigits, n, {}}; }
  static PatternToken Of(TokenKind k) { return {k, 0, {}}; }
  static PatternToken Literal(std::string s) {
    return {TokenKind::kLiteral, 0, std::move(s)};
  }

  // "digits(13)", "DATE", "TIME", "UPPER", "ALNUM", "CURRENCY", "BOL", "EOL",
  // "lit(<text>)". Parse is the inverse; it throws ParseError.
  std::string Name() const;
  static PatternToken Parse(std::string_view name);

  // Non-overlapping matches as [begin, end) byte spans, left to right.
  std::vector<std::pair<size_t, size_t>> Matches(std::string_view text) const;
  // True when one match spans the whole trimmed text.
  bool MatchesWhole(std::string_view text) const;

  auto operator<=>(const PatternToken&) const = default;
  bool operator==(const PatternToken&) const = default;
};

// Tokens for box motions: digits(n) for every digit-run length seen in
// `samples` (ascending), then DATE, TIME, UPPER, CURRENCY, EOL.
std::vector<PatternToken> ProfilePatterns(
    const std::vector<std::string>& samples);

}  // namespace lrx

#endif  // LRX_PATTERN_H_
