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
#ifndef LRX_TEXT_H_
#define LRX_TEXT_H_

#include <string>
#include <string_view>
#include <vector>

namespace lrx {

std::string Trim(std::string_view s);

// Collapses whitespace runs to a single space and trims.
std::string CollapseWhitespace(std::string_view s);

std::string ToLower(std::string_view s);

std::vector<std::string> SplitWhitespace(std::string_view s);

// Joins the non-empty trimmed parts with `sep`.
std::string JoinNonEmpty(const std::vector<std::string>& parts,
                         std::string_view sep);

std::string Join(const std::vector<std::string>& parts, std::string_view sep);

// All contiguous token n-grams of `text` with 1 <= n <= max_n, each rendered
// as its tokens joined by single spaces. Order: by start token, then length.
std::vector<std::string> TokenNGrams(std::string_view text, int max_n);

// True when `s` has no letter or digit.
bool IsPunctuationOnly(std::string_view s);

}  // namespace lrx

#endif  // LRX_TEXT_H_
