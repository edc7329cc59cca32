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
#include "lrx/pattern.h"

#include <cctype>
#include <set>

#include "lrx/errors.h"
#include "lrx/text.h"

namespace lrx {
namespace {

constexpr size_t kNoMatch = std::string_view::npos;

bool IsDigit(std::string_view s, size_t i) {
  return i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]));
}
bool IsUpper(char c) { return std::isupper(static_cast<unsigned char>(c)); }
bool IsLower(char c) { return std::islower(static_cast<unsigned char>(c)); }
bool IsAlnum(char c) { return std::isalnum(static_cast<unsigned char>(c)); }

size_t DigitsAt(std::string_view s, size_t i, size_t max = 64) {
  size_t n = 0;
  while (n < max && IsDigit(s, i + n)) ++n;
  return n;
}

// Each matcher returns the end of a match starting at `i`, or kNoMatch.

size_t MatchTime(std::string_view s, size_t i) {
  const size_t h = DigitsAt(s, i, 3);
  if (h < 1 || h > 2 || i + h >= s.size() || s[i + h] != ':') return kNoMatch;
  size_t p = i + h + 1;
  if (DigitsAt(s, p, 3) != 2) return kNoMatch;
  p += 2;
  if (p < s.size() && s[p] == ':' && DigitsAt(s, p + 1, 3) == 2) p += 3;
  if (IsDigit(s, p)) return kNoMatch;
  size_t q = p;
  if (q < s.size() && s[q] == ' ') ++q;
  if (q + 2 <= s.size()) {
    const int a = std::toupper(static_cast<unsigned char>(s[q]));
    const int m = std::toupper(static_cast<unsigned char>(s[q + 1]));
    const bool boundary = q + 2 == s.size() || !IsAlnum(s[q + 2]);
    if ((a == 'A' || a == 'P') && m == 'M' && boundary) return q + 2;
  }
  return p;
}

size_t MatchDate(std::string_view s, size_t i) {
  size_t a = DigitsAt(s, i, 5);
  if (a == 4) {
    size_t p = i + 4;
    if (p < s.size() && s[p] == '-' && DigitsAt(s, p + 1, 3) == 2 &&
        p + 3 < s.size() && s[p + 3] == '-' && DigitsAt(s, p + 4, 3) == 2) {
      return p + 6;
    }
    return kNoMatch;
  }
  if (a < 1 || a > 2 || i + a >= s.size()) return kNoMatch;
  const char sep = s[i + a];
  if (sep != '/' && sep != '-' && sep != '.') return kNoMatch;
  size_t p = i + a + 1;
  const size_t b = DigitsAt(s, p, 3);
  if (b < 1 || b > 2 || p + b >= s.size() || s[p + b] != sep) return kNoMatch;
  p += b + 1;
  const size_t c = DigitsAt(s, p, 5);
  if (c != 2 && c != 4) return kNoMatch;
  return p + c;
}

size_t MatchCurrency(std::string_view s, size_t i) {
  size_t p = i;
  bool symbol = false;
  if (p < s.size() && (s[p] == '$')) {
    symbol = true;
    ++p;
  } else if (s.substr(p, 2) == "\xC2\xA3") {  // pound sign
    symbol = true;
    p += 2;
  } else if (s.substr(p, 3) == "\xE2\x82\xAC") {  // euro sign
    symbol = true;
    p += 3;
  }
  const size_t lead = DigitsAt(s, p);
  if (lead == 0) return kNoMatch;
  p += lead;
  if (lead <= 3) {
    while (p + 3 < s.size() && s[p] == ',' && DigitsAt(s, p + 1, 4) == 3) {
      p += 4;
    }
  }
  bool decimals = false;
  if (p < s.size() && s[p] == '.' && DigitsAt(s, p + 1, 3) == 2) {
    decimals = true;
    p += 3;
  }
  if (IsDigit(s, p)) return kNoMatch;
  return symbol || decimals ? p : kNoMatch;
}

}  // namespace

std::string PatternToken::Name() const {
  switch (kind) {
    case TokenKind::kDigits:
      return length > 0 ? "digits(" + std::to_string(length) + ")" : "digits";
    case TokenKind::kDate:
      return "DATE";
    case TokenKind::kTime:
      return "TIME";
    case TokenKind::kUpperWord:
      return "UPPER";
    case TokenKind::kAlnum:
      return "ALNUM";
    case TokenKind::kCurrency:
      return "CURRENCY";
    case TokenKind::kStartOfLine:
      return "BOL";
    case TokenKind::kEndOfLine:
      return "EOL";
    case TokenKind::kLiteral:
      return "lit(" + literal + ")";
  }
  return "?";
}

PatternToken PatternToken::Parse(std::string_view name) {
  if (name == "digits") return Digits(0);
  if (name.rfind("digits(", 0) == 0 && name.back() == ')') {
    try {
      return Digits(std::stoi(std::string(name.substr(7, name.size() - 8))));
    } catch (const std::exception&) {
      throw ParseError("bad pattern token " + std::string(name));
    }
  }
  if (name.rfind("lit(", 0) == 0 && name.size() > 5 && name.back() == ')') {
    return Literal(std::string(name.substr(4, name.size() - 5)));
  }
  for (TokenKind k : {TokenKind::kDate, TokenKind::kTime, TokenKind::kUpperWord,
                      TokenKind::kAlnum, TokenKind::kCurrency,
                      TokenKind::kStartOfLine, TokenKind::kEndOfLine}) {
    if (Of(k).Name() == name) return Of(k);
  }
  throw ParseError("unknown pattern token " + std::string(name));
}

std::vector<std::pair<size_t, size_t>> PatternToken::Matches(
    std::string_view s) const {
  std::vector<std::pair<size_t, size_t>> out;
  switch (kind) {
    case TokenKind::kStartOfLine:
      out.emplace_back(0, 0);
      return out;
    case TokenKind::kEndOfLine:
      out.emplace_back(s.size(), s.size());
      return out;
    case TokenKind::kLiteral: {
      if (literal.empty()) return out;
      size_t p = s.find(literal);
      while (p != std::string_view::npos) {
        out.emplace_back(p, p + literal.size());
        p = s.find(literal, p + literal.size());
      }
      return out;
    }
    case TokenKind::kDigits:
    case TokenKind::kAlnum:
    case TokenKind::kUpperWord: {
      size_t i = 0;
      while (i < s.size()) {
        const bool digit_mode = kind == TokenKind::kDigits;
        auto in_run = [&](char c) {
          return digit_mode ? std::isdigit(static_cast<unsigned char>(c)) != 0
                            : IsAlnum(c);
        };
        if (!in_run(s[i])) {
          ++i;
          continue;
        }
        size_t j = i;
        while (j < s.size() && in_run(s[j])) ++j;
        bool ok = true;
        if (kind == TokenKind::kDigits) {
          ok = length == 0 || static_cast<int>(j - i) == length;
        } else if (kind == TokenKind::kUpperWord) {
          bool has_upper = false;
          for (size_t k = i; k < j; ++k) {
            if (IsLower(s[k])) ok = false;
            if (IsUpper(s[k])) has_upper = true;
          }
          ok = ok && has_upper;
        }
        if (ok) out.emplace_back(i, j);
        i = j;
      }
      return out;
    }
    case TokenKind::kDate:
    case TokenKind::kTime:
    case TokenKind::kCurrency: {
      size_t i = 0;
      while (i < s.size()) {
        const bool boundary = i == 0 || !IsDigit(s, i - 1);
        size_t e = kNoMatch;
        if (boundary) {
          e = kind == TokenKind::kDate   ? MatchDate(s, i)
              : kind == TokenKind::kTime ? MatchTime(s, i)
                                         : MatchCurrency(s, i);
        }
        if (e != kNoMatch && !(kind != TokenKind::kTime && IsDigit(s, e))) {
          out.emplace_back(i, e);
          i = e;
        } else {
          ++i;
        }
      }
      return out;
    }
  }
  return out;
}

bool PatternToken::MatchesWhole(std::string_view text) const {
  const std::string t = Trim(text);
  if (kind == TokenKind::kStartOfLine || kind == TokenKind::kEndOfLine) {
    return t.empty();
  }
  if (t.empty()) return false;
  for (const auto& [b, e] : Matches(t)) {
    if (b == 0 && e == t.size()) return true;
  }
  return false;
}

std::vector<PatternToken> ProfilePatterns(
    const std::vector<std::string>& samples) {
  std::set<int> lengths;
  for (const auto& s : samples) {
    for (const auto& [b, e] : PatternToken::Digits(0).Matches(s)) {
      lengths.insert(static_cast<int>(e - b));
    }
  }
  std::vector<PatternToken> out;
  for (int n : lengths) out.push_back(PatternToken::Digits(n));
  for (TokenKind k : {TokenKind::kDate, TokenKind::kTime, TokenKind::kUpperWord,
                      TokenKind::kCurrency, TokenKind::kEndOfLine}) {
    out.push_back(PatternToken::Of(k));
  }
  return out;
}

}  // namespace lrx
