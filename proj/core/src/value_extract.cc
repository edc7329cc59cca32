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
#include "lrx/value_extract.h"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <tuple>

#include "lrx/errors.h"
#include "lrx/text.h"

namespace lrx {
namespace {

// ---------------------------------------------------------------------------
// Selectors

int Penalty(const SelectorAtom& a) {
  switch (a.kind) {
    case SelectorAtom::Kind::kTag:
    case SelectorAtom::Kind::kClass:
    case SelectorAtom::Kind::kId:
      return 0;
    case SelectorAtom::Kind::kAttrContains:
      return 1;
    case SelectorAtom::Kind::kNthChild:
      return 2;
  }
  return 3;
}

std::string AtomCss(const SelectorAtom& a) {
  switch (a.kind) {
    case SelectorAtom::Kind::kTag:
      return a.value;
    case SelectorAtom::Kind::kClass:
      return "." + a.value;
    case SelectorAtom::Kind::kId:
      return "#" + a.value;
    case SelectorAtom::Kind::kAttrContains:
      return "[" + a.name + "*=\"" + a.value + "\"]";
    case SelectorAtom::Kind::kNthChild:
      return ":nth-child(" + std::to_string(a.n) + ")";
  }
  return "?";
}

bool HasClass(const TreeNode& node, const std::string& c) {
  auto it = node.attributes.find("class");
  if (it == node.attributes.end()) return false;
  for (const auto& t : SplitWhitespace(it->second)) {
    if (t == c) return true;
  }
  return false;
}

int NthChild(const TreeDocument& doc, const TreeRegion& region, NodeId n) {
  if (doc.parent(n) == region.anchor) {
    return doc.child_index(n) - region.first + 1;
  }
  return doc.child_index(n) + 1;
}

bool AtomMatches(const SelectorAtom& a, const TreeDocument& doc,
                 const TreeRegion& region, NodeId n) {
  const TreeNode& node = doc.node(n);
  switch (a.kind) {
    case SelectorAtom::Kind::kTag:
      return node.tag == a.value;
    case SelectorAtom::Kind::kClass:
      return HasClass(node, a.value);
    case SelectorAtom::Kind::kId: {
      auto it = node.attributes.find("id");
      return it != node.attributes.end() && it->second == a.value;
    }
    case SelectorAtom::Kind::kAttrContains: {
      auto it = node.attributes.find(a.name);
      return it != node.attributes.end() &&
             it->second.find(a.value) != std::string::npos;
    }
    case SelectorAtom::Kind::kNthChild:
      return NthChild(doc, region, n) == a.n;
  }
  return false;
}

std::vector<SelectorAtom> Features(const TreeDocument& doc,
                                   const TreeRegion& region, NodeId n) {
  const TreeNode& node = doc.node(n);
  std::vector<SelectorAtom> out;
  out.push_back({SelectorAtom::Kind::kTag, {}, node.tag, 0});
  if (auto it = node.attributes.find("class"); it != node.attributes.end()) {
    std::set<std::string> seen;
    for (const auto& c : SplitWhitespace(it->second)) {
      if (seen.insert(c).second) out.push_back({SelectorAtom::Kind::kClass, {}, c, 0});
    }
  }
  if (auto it = node.attributes.find("id"); it != node.attributes.end() &&
                                            !it->second.empty()) {
    out.push_back({SelectorAtom::Kind::kId, {}, it->second, 0});
  }
  for (const auto& [name, value] : node.attributes) {
    if (name == "class" || name == "id" || value.empty()) continue;
    out.push_back({SelectorAtom::Kind::kAttrContains, name, value, 0});
  }
  out.push_back({SelectorAtom::Kind::kNthChild, {}, {}, NthChild(doc, region, n)});
  return out;
}

// ---------------------------------------------------------------------------
// Text programs

enum PositionClass { kDelimiter = 0, kWord = 1, kToken = 2 };

int ClassOf(const PatternToken& t) {
  switch (t.kind) {
    case TokenKind::kStartOfLine:
    case TokenKind::kEndOfLine:
      return kDelimiter;
    case TokenKind::kLiteral:
      return t.literal.size() == 1 ? kDelimiter : kWord;
    default:
      return kToken;
  }
}

std::optional<size_t> Resolve(const TextPosition& p, std::string_view text) {
  const auto m = p.token.Matches(text);
  const int n = static_cast<int>(m.size());
  const int idx = p.k > 0 ? p.k - 1 : n + p.k;
  if (p.k == 0 || idx < 0 || idx >= n) return std::nullopt;
  return p.after ? m[idx].second : m[idx].first;
}

bool BlankBetween(std::string_view text, size_t a, size_t b) {
  for (size_t i = a; i < b; ++i) {
    if (!std::isspace(static_cast<unsigned char>(text[i]))) return false;
  }
  return true;
}

std::vector<std::pair<size_t, size_t>> Occurrences(std::string_view text,
                                                   std::string_view value) {
  std::vector<std::pair<size_t, size_t>> out;
  if (value.empty()) return out;
  for (size_t p = text.find(value); p != std::string_view::npos;
       p = text.find(value, p + 1)) {
    out.emplace_back(p, p + value.size());
  }
  return out;
}

bool IsAlnumChar(char c) { return std::isalnum(static_cast<unsigned char>(c)); }

void AddLiterals(std::string_view text, size_t s, size_t e,
                 std::set<PatternToken>& out) {
  size_t b = s;
  while (b > 0 && std::isspace(static_cast<unsigned char>(text[b - 1]))) --b;
  if (b > 0) {
    if (!IsAlnumChar(text[b - 1])) {
      out.insert(PatternToken::Literal(std::string(1, text[b - 1])));
    }
    size_t w = b;
    while (w > 0 && !std::isspace(static_cast<unsigned char>(text[w - 1]))) --w;
    if (b - w > 1) out.insert(PatternToken::Literal(std::string(text.substr(w, b - w))));
  }
  size_t a = e;
  while (a < text.size() && std::isspace(static_cast<unsigned char>(text[a]))) ++a;
  if (a < text.size()) {
    if (!IsAlnumChar(text[a])) {
      out.insert(PatternToken::Literal(std::string(1, text[a])));
    }
    size_t w = a;
    while (w < text.size() && !std::isspace(static_cast<unsigned char>(text[w]))) ++w;
    if (w - a > 1) out.insert(PatternToken::Literal(std::string(text.substr(a, w - a))));
  }
}

using PosKey = std::tuple<int, int, int, std::string>;

PosKey KeyOf(const TextPosition& p) {
  return {ClassOf(p.token), std::abs(p.k), p.k < 0 ? 1 : 0, ToString(p)};
}

}  // namespace

int NodeSelector::AtomCount() const {
  int n = 0;
  for (const auto& s : steps) n += static_cast<int>(s.atoms.size());
  return n;
}

std::string ToCss(const NodeSelector& s) {
  std::string out;
  for (const auto& step : s.steps) {
    if (!out.empty()) out += ' ';
    if (step.axis == SelectorStep::Axis::kChildren) out += "> ";
    if (step.atoms.empty()) out += '*';
    for (const auto& a : step.atoms) out += AtomCss(a);
  }
  return out;
}

std::vector<NodeId> EvalSelector(const NodeSelector& s, const TreeDocument& doc,
                                 const TreeRegion& region) {
  const std::vector<NodeId> roots = RegionRoots(doc, region);
  const auto [begin, end] = RegionRange(doc, region);
  constexpr NodeId kAnchor = -2;
  std::vector<NodeId> current{kAnchor};
  for (const auto& step : s.steps) {
    std::set<NodeId> next;
    auto consider = [&](NodeId n) {
      for (const auto& a : step.atoms) {
        if (!AtomMatches(a, doc, region, n)) return;
      }
      next.insert(n);
    };
    for (NodeId c : current) {
      if (step.axis == SelectorStep::Axis::kChildren) {
        if (c == kAnchor) {
          for (NodeId r : roots) consider(r);
        } else {
          for (NodeId k : doc.children(c)) consider(k);
        }
      } else {
        const NodeId b = c == kAnchor ? begin : c + 1;
        const NodeId e = c == kAnchor ? end : doc.subtree_end(c);
        for (NodeId n = b; n < e; ++n) consider(n);
      }
    }
    current.assign(next.begin(), next.end());
    if (current.empty()) break;
  }
  if (!current.empty() && current[0] == kAnchor) return {};
  return current;
}

std::string ToString(const TextPosition& p) {
  return std::string(p.after ? "after " : "before ") + p.token.Name() + "#" +
         std::to_string(p.k);
}

std::string ToString(const TextProgram& p) {
  switch (p.kind) {
    case TextProgram::Kind::kIdentity:
      return "Identity";
    case TextProgram::Kind::kExtract:
      return "Extract(" + ToString(p.start) + ", " + ToString(p.end) + ")";
    case TextProgram::Kind::kConcat: {
      std::string out = "Concat(";
      for (size_t i = 0; i < p.parts.size(); ++i) {
        if (i) out += ", ";
        out += ToString(p.parts[i]);
      }
      return out + ")";
    }
  }
  return "?";
}

std::optional<std::string> ExecText(const TextProgram& p, std::string_view text) {
  switch (p.kind) {
    case TextProgram::Kind::kIdentity: {
      std::string t = Trim(text);
      if (t.empty()) return std::nullopt;
      return t;
    }
    case TextProgram::Kind::kExtract: {
      const auto a = Resolve(p.start, text);
      const auto b = Resolve(p.end, text);
      if (!a || !b || *a > *b) return std::nullopt;
      std::string t = Trim(text.substr(*a, *b - *a));
      if (t.empty()) return std::nullopt;
      return t;
    }
    case TextProgram::Kind::kConcat: {
      std::string out;
      for (const auto& part : p.parts) {
        auto r = ExecText(part, text);
        if (!r) return std::nullopt;
        out += *r;
      }
      return out;
    }
  }
  return std::nullopt;
}

TextProgram SynthesizeText(std::span<const TextExample> examples,
                           const std::vector<PatternToken>& extra_tokens) {
  if (examples.empty()) throw SynthesisError("no text examples");
  bool identity = true;
  for (const auto& ex : examples) {
    if (ex.expected.empty()) throw SynthesisError("empty expected value");
    if (Trim(ex.text) != ex.expected) identity = false;
  }
  if (identity) return TextProgram::Identity();

  const TextExample& first = examples[0];
  const auto occ = Occurrences(first.text, first.expected);
  if (occ.empty()) {
    throw SynthesisError("value \"" + first.expected + "\" does not occur in \"" +
                         first.text + "\"");
  }
  std::set<PatternToken> tokens(extra_tokens.begin(), extra_tokens.end());
  for (TokenKind k : {TokenKind::kStartOfLine, TokenKind::kEndOfLine,
                      TokenKind::kDate, TokenKind::kTime, TokenKind::kCurrency,
                      TokenKind::kUpperWord, TokenKind::kAlnum}) {
    tokens.insert(PatternToken::Of(k));
  }
  tokens.insert(PatternToken::Digits(0));
  for (const auto& ex : examples) {
    for (const auto& [b, e] : PatternToken::Digits(0).Matches(ex.expected)) {
      tokens.insert(PatternToken::Digits(static_cast<int>(e - b)));
    }
  }
  for (const auto& [s, e] : occ) AddLiterals(first.text, s, e, tokens);

  std::set<TextPosition> starts;
  std::set<TextPosition> ends;
  for (const auto& t : tokens) {
    const auto m = t.Matches(first.text);
    const int n = static_cast<int>(m.size());
    for (int i = 0; i < n; ++i) {
      for (bool after : {false, true}) {
        const size_t pos = after ? m[i].second : m[i].first;
        for (const auto& [s, e] : occ) {
          if (pos <= s && BlankBetween(first.text, pos, s)) {
            starts.insert({t, i + 1, after});
            starts.insert({t, i - n, after});
          }
          if (pos >= e && BlankBetween(first.text, e, pos)) {
            ends.insert({t, i + 1, after});
            ends.insert({t, i - n, after});
          }
        }
      }
    }
  }
  std::vector<TextPosition> sv(starts.begin(), starts.end());
  std::vector<TextPosition> ev(ends.begin(), ends.end());
  using PairKey = std::tuple<int, int, int, std::string, std::string>;
  std::vector<std::pair<PairKey, std::pair<size_t, size_t>>> pairs;
  for (size_t i = 0; i < sv.size(); ++i) {
    const PosKey ks = KeyOf(sv[i]);
    for (size_t j = 0; j < ev.size(); ++j) {
      const PosKey ke = KeyOf(ev[j]);
      pairs.push_back({{std::get<0>(ks) + std::get<0>(ke),
                        std::get<1>(ks) + std::get<1>(ke),
                        std::get<2>(ks) + std::get<2>(ke), std::get<3>(ks),
                        std::get<3>(ke)},
                       {i, j}});
    }
  }
  std::sort(pairs.begin(), pairs.end());
  for (const auto& [key, ij] : pairs) {
    const TextProgram p = TextProgram::Extract(sv[ij.first], ev[ij.second]);
    bool ok = true;
    for (const auto& ex : examples) {
      const auto r = ExecText(p, ex.text);
      if (!r || *r != ex.expected) {
        ok = false;
        break;
      }
    }
    if (ok) return p;
  }
  throw SynthesisError("no text program extracts \"" + first.expected +
                       "\" from \"" + first.text + "\" consistently");
}

std::string ToString(const ValueProgram& p) {
  if (const auto* t = std::get_if<TreeValueProgram>(&p)) {
    return "select(" + ToCss(t->selector) + ") | " + ToString(t->text);
  }
  return "boxes | " + ToString(std::get<BoxValueProgram>(p).text);
}

std::string RegionText(const BoxDocument& doc, const BoxRegion& region) {
  std::vector<std::string> parts;
  for (int b : region.boxes) parts.push_back(doc.box(b).text);
  return JoinNonEmpty(parts, " ");
}

std::optional<std::vector<std::string>> ExecValue(const ValueProgram& p,
                                                  const Document& doc,
                                                  const Region& region) {
  if (const auto* t = std::get_if<TreeValueProgram>(&p)) {
    const auto& tr = std::get<TreeRegion>(region);
    const std::vector<NodeId> nodes = EvalSelector(t->selector, doc.tree(), tr);
    if (nodes.empty()) return std::nullopt;
    std::vector<std::string> out;
    for (NodeId n : nodes) {
      auto v = ExecText(t->text, doc.tree().data(n));
      if (!v) return std::nullopt;
      out.push_back(std::move(*v));
    }
    return out;
  }
  const auto& b = std::get<BoxValueProgram>(p);
  auto v = ExecText(b.text, RegionText(doc.boxes(), std::get<BoxRegion>(region)));
  if (!v) return std::nullopt;
  return std::vector<std::string>{std::move(*v)};
}

NodeSelector SynthesizeSelector(
    const std::vector<std::pair<const TreeDocument*, TreeRegion>>& regions,
    const std::vector<std::vector<NodeId>>& targets,
    const SelectorConfig& config) {
  if (regions.empty() || regions.size() != targets.size() || targets[0].empty()) {
    throw SynthesisError("selector synthesis needs one target list per region");
  }
  const TreeDocument& doc0 = *regions[0].first;
  const TreeRegion& region0 = regions[0].second;
  const NodeId t0 = targets[0][0];
  if (!RegionContains(doc0, region0, t0)) {
    throw SynthesisError("value node lies outside its region");
  }
  // Chain of region nodes from the top level down to the target.
  std::vector<NodeId> chain;
  for (NodeId n = t0;; n = doc0.parent(n)) {
    chain.push_back(n);
    if (doc0.parent(n) == region0.anchor) break;
  }
  std::reverse(chain.begin(), chain.end());
  const int depth = static_cast<int>(chain.size());
  std::vector<std::vector<SelectorAtom>> features;
  for (NodeId n : chain) features.push_back(Features(doc0, region0, n));

  auto consistent = [&](const NodeSelector& s) {
    for (size_t i = 0; i < regions.size(); ++i) {
      if (EvalSelector(s, *regions[i].first, regions[i].second) != targets[i]) {
        return false;
      }
    }
    return true;
  };

  using Key = std::tuple<int, size_t, std::string>;
  const int max_budget = config.max_steps * config.max_atoms_per_step;
  long evaluations = 0;
  constexpr long kMaxEvaluations = 400000;
  for (int budget = 0; budget <= max_budget; ++budget) {
    std::optional<std::pair<Key, NodeSelector>> best;
    NodeSelector cur;
    // Steps pick strictly deeper chain levels; the last one is the target.
    std::function<void(int, int)> rec = [&](int prev_level, int left) {
      if (evaluations > kMaxEvaluations) return;
      if (prev_level == depth - 1) {
        if (left != 0) return;
        ++evaluations;
        if (!consistent(cur)) return;
        int penalty = 0;
        for (const auto& st : cur.steps) {
          for (const auto& a : st.atoms) penalty += Penalty(a);
        }
        Key key{penalty, cur.steps.size(), ToCss(cur)};
        if (!best || key < best->first) best = {key, cur};
        return;
      }
      if (static_cast<int>(cur.steps.size()) >= config.max_steps) return;
      for (int level = prev_level + 1; level < depth; ++level) {
        const int remaining_steps = config.max_steps - static_cast<int>(cur.steps.size()) - 1;
        if (level != depth - 1 && remaining_steps <= 0) continue;
        const auto& f = features[level];
        const int nf = static_cast<int>(f.size());
        for (auto axis : {SelectorStep::Axis::kChildren, SelectorStep::Axis::kDescendants}) {
          if (axis == SelectorStep::Axis::kChildren && level != prev_level + 1) continue;
          for (int a = 0; a <= std::min(config.max_atoms_per_step, left); ++a) {
            // Choose `a` atoms of this level's features.
            std::vector<int> pick(a);
            std::function<void(int, int)> choose = [&](int from, int slot) {
              if (slot == a) {
                SelectorStep st{axis, {}};
                for (int i : pick) st.atoms.push_back(f[i]);
                cur.steps.push_back(std::move(st));
                rec(level, left - a);
                cur.steps.pop_back();
                return;
              }
              for (int i = from; i < nf; ++i) {
                pick[slot] = i;
                choose(i + 1, slot + 1);
              }
            };
            choose(0, 0);
          }
        }
      }
    };
    rec(-1, budget);
    if (best) return best->second;
    if (evaluations > kMaxEvaluations) break;
  }
  throw SynthesisError("no node selector reaches the value nodes of every example");
}

ValueProgram SynthesizeValue(std::span<const ValueExample> examples,
                             const SelectorConfig& config) {
  if (examples.empty()) throw SynthesisError("no value examples");
  if (examples[0].doc->kind() == DocKind::kBox) {
    std::vector<TextExample> tex;
    for (const auto& ex : examples) {
      if (ex.expected.size() != 1) {
        throw SynthesisError("box regions carry exactly one value");
      }
      tex.push_back({RegionText(ex.doc->boxes(), std::get<BoxRegion>(ex.region)),
                     ex.expected[0]});
    }
    return BoxValueProgram{SynthesizeText(tex)};
  }
  std::vector<std::pair<const TreeDocument*, TreeRegion>> regions;
  std::vector<std::vector<NodeId>> targets;
  std::vector<TextExample> tex;
  for (const auto& ex : examples) {
    const TreeDocument& doc = ex.doc->tree();
    if (ex.targets.size() != ex.expected.size()) {
      throw SynthesisError("one expected value per target node is required");
    }
    std::vector<std::pair<NodeId, std::string>> nodes;
    for (size_t i = 0; i < ex.targets.size(); ++i) {
      nodes.emplace_back(ResolveNode(doc, ex.targets[i]), ex.expected[i]);
    }
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    std::vector<NodeId> ids;
    for (const auto& [n, v] : nodes) {
      ids.push_back(n);
      tex.push_back({doc.data(n), v});
    }
    regions.emplace_back(&doc, std::get<TreeRegion>(ex.region));
    targets.push_back(std::move(ids));
  }
  NodeSelector selector = SynthesizeSelector(regions, targets, config);
  return TreeValueProgram{std::move(selector), SynthesizeText(tex)};
}

}  // namespace lrx
