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
#include "lrx/ingest.h"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "lrx/errors.h"
#include "lrx/text.h"

namespace lrx {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// HTML subset

const std::set<std::string, std::less<>> kVoidTags = {
    "area", "base", "br",   "col",   "embed",  "hr",    "img",
    "input", "link", "meta", "param", "source", "track", "wbr"};
const std::set<std::string, std::less<>> kKeptAttrs = {"class", "id", "style"};

void AppendUtf8(std::string& out, unsigned long cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

std::string DecodeEntities(std::string_view s) {
  std::string out;
  size_t i = 0;
  while (i < s.size()) {
    if (s[i] != '&') {
      out += s[i++];
      continue;
    }
    const size_t semi = s.find(';', i);
    if (semi == std::string_view::npos || semi - i > 10) {
      out += s[i++];
      continue;
    }
    const std::string_view name = s.substr(i + 1, semi - i - 1);
    bool ok = true;
    if (name == "amp") {
      out += '&';
    } else if (name == "lt") {
      out += '<';
    } else if (name == "gt") {
      out += '>';
    } else if (name == "quot") {
      out += '"';
    } else if (name == "apos") {
      out += '\'';
    } else if (name == "nbsp") {
      out += ' ';
    } else if (name.size() > 1 && name[0] == '#') {
      const bool hex = name[1] == 'x' || name[1] == 'X';
      const std::string digits(name.substr(hex ? 2 : 1));
      try {
        size_t used = 0;
        const unsigned long cp = std::stoul(digits, &used, hex ? 16 : 10);
        ok = used == digits.size() && cp <= 0x10FFFF;
        if (ok) AppendUtf8(out, cp);
      } catch (const std::exception&) {
        ok = false;
      }
    } else {
      ok = false;
    }
    if (ok) {
      i = semi + 1;
    } else {
      out += s[i++];
    }
  }
  return out;
}

class HtmlParser {
 public:
  explicit HtmlParser(std::string_view in) : in_(in) {}

  TreeNode Parse() {
    while (pos_ < in_.size()) {
      if (in_[pos_] == '<') {
        ParseMarkup();
      } else {
        ParseText();
      }
    }
    if (!stack_.empty()) {
      throw ParseError("unclosed element <" + stack_.back().node.tag + ">",
                       stack_.back().offset);
    }
    if (!root_) throw ParseError("document has no root element", 0);
    return std::move(*root_);
  }

 private:
  struct Open {
    TreeNode node;
    std::vector<std::string> texts;
    size_t offset;
  };

  static bool IsNameChar(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '-' ||
           c == '_' || c == ':';
  }

  void SkipSpace() {
    while (pos_ < in_.size() &&
           std::isspace(static_cast<unsigned char>(in_[pos_]))) {
      ++pos_;
    }
  }

  std::string ReadName() {
    const size_t b = pos_;
    while (pos_ < in_.size() && IsNameChar(in_[pos_])) ++pos_;
    return ToLower(in_.substr(b, pos_ - b));
  }

  void SkipPast(std::string_view terminator, size_t start) {
    const size_t e = in_.find(terminator, pos_);
    if (e == std::string_view::npos) {
      throw ParseError("unterminated markup", start);
    }
    pos_ = e + terminator.size();
  }

  void ParseText() {
    const size_t b = pos_;
    const size_t e = in_.find('<', pos_);
    pos_ = e == std::string_view::npos ? in_.size() : e;
    const std::string text = DecodeEntities(in_.substr(b, pos_ - b));
    if (Trim(text).empty()) return;
    if (stack_.empty()) throw ParseError("text outside the root element", b);
    stack_.back().texts.push_back(text);
  }

  void ParseMarkup() {
    const size_t start = pos_;
    if (in_.substr(pos_, 4) == "<!--") {
      pos_ += 4;
      SkipPast("-->", start);
      return;
    }
    if (in_.substr(pos_, 2) == "<!" || in_.substr(pos_, 2) == "<?") {
      SkipPast(">", start);
      return;
    }
    if (in_.substr(pos_, 2) == "</") {
      pos_ += 2;
      const std::string name = ReadName();
      SkipSpace();
      if (pos_ >= in_.size() || in_[pos_] != '>') {
        throw ParseError("malformed closing tag", start);
      }
      ++pos_;
      Close(name, start);
      return;
    }
    ++pos_;
    const std::string name = ReadName();
    if (name.empty()) throw ParseError("malformed tag", start);
    TreeNode node;
    node.tag = name;
    bool self_closing = false;
    while (true) {
      SkipSpace();
      if (pos_ >= in_.size()) throw ParseError("unterminated tag", start);
      if (in_[pos_] == '>') {
        ++pos_;
        break;
      }
      if (in_.substr(pos_, 2) == "/>") {
        pos_ += 2;
        self_closing = true;
        break;
      }
      const std::string attr = ReadName();
      if (attr.empty()) throw ParseError("malformed attribute", pos_);
      SkipSpace();
      std::string value;
      if (pos_ < in_.size() && in_[pos_] == '=') {
        ++pos_;
        SkipSpace();
        if (pos_ < in_.size() && (in_[pos_] == '"' || in_[pos_] == '\'')) {
          const char q = in_[pos_++];
          const size_t e = in_.find(q, pos_);
          if (e == std::string_view::npos) {
            throw ParseError("unterminated attribute value", start);
          }
          value = DecodeEntities(in_.substr(pos_, e - pos_));
          pos_ = e + 1;
        } else {
          const size_t b = pos_;
          while (pos_ < in_.size() &&
                 !std::isspace(static_cast<unsigned char>(in_[pos_])) &&
                 in_[pos_] != '>') {
            ++pos_;
          }
          value = DecodeEntities(in_.substr(b, pos_ - b));
        }
      }
      if (kKeptAttrs.count(attr)) {
        node.attributes[attr] = CollapseWhitespace(value);
      }
    }
    if (name == "script" || name == "style") {
      if (!self_closing) {
        const std::string close = "</" + name;
        size_t e = pos_;
        while (true) {
          e = in_.find("</", e);
          if (e == std::string_view::npos) {
            throw ParseError("unclosed element <" + name + ">", start);
          }
          if (ToLower(in_.substr(e, close.size())) == close) break;
          e += 2;
        }
        pos_ = e;
        SkipPast(">", start);
      }
      return;
    }
    Push(std::move(node), start);
    if (self_closing || kVoidTags.count(name)) Close(name, start);
  }

  void Push(TreeNode node, size_t offset) {
    if (stack_.empty() && root_) {
      throw ParseError("more than one root element", offset);
    }
    stack_.push_back(Open{std::move(node), {}, offset});
  }

  void Close(const std::string& name, size_t offset) {
    if (stack_.empty()) {
      throw ParseError("closing tag </" + name + "> without open element",
                       offset);
    }
    if (stack_.back().node.tag != name) {
      throw ParseError("closing tag </" + name + "> does not match <" +
                           stack_.back().node.tag + ">",
                       offset);
    }
    Open done = std::move(stack_.back());
    stack_.pop_back();
    done.node.own_text = CollapseWhitespace(Join(done.texts, " "));
    if (stack_.empty()) {
      root_ = std::move(done.node);
    } else {
      stack_.back().node.children.push_back(std::move(done.node));
    }
  }

  std::string_view in_;
  size_t pos_ = 0;
  std::vector<Open> stack_;
  std::optional<TreeNode> root_;
};

// ---------------------------------------------------------------------------
// Normalized tree JSON

TreeNode NodeFromJson(const json& j) {
  if (!j.is_object()) throw ParseError("tree node must be an object");
  TreeNode node;
  auto tag = j.find("tag");
  if (tag == j.end() || !tag->is_string() || tag->get<std::string>().empty()) {
    throw ParseError("tree node needs a non-empty string \"tag\"");
  }
  node.tag = tag->get<std::string>();
  if (auto a = j.find("attrs"); a != j.end()) {
    if (!a->is_object()) throw ParseError("\"attrs\" must be an object");
    for (const auto& [k, v] : a->items()) {
      if (!v.is_string()) throw ParseError("attribute values must be strings");
      node.attributes[k] = v.get<std::string>();
    }
  }
  if (auto t = j.find("text"); t != j.end()) {
    if (!t->is_string()) throw ParseError("\"text\" must be a string");
    node.own_text = t->get<std::string>();
  }
  if (auto c = j.find("children"); c != j.end()) {
    if (!c->is_array()) throw ParseError("\"children\" must be an array");
    for (const auto& child : *c) node.children.push_back(NodeFromJson(child));
  }
  return node;
}

ordered_json NodeToJson(const TreeNode& node) {
  ordered_json j;
  j["tag"] = node.tag;
  j["attrs"] = ordered_json::object();
  for (const auto& [k, v] : node.attributes) j["attrs"][k] = v;
  j["text"] = node.own_text;
  j["children"] = ordered_json::array();
  for (const auto& c : node.children) j["children"].push_back(NodeToJson(c));
  return j;
}

json ParseJson(std::string_view bytes) {
  try {
    return json::parse(bytes);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(),
                     e.byte > 0 ? e.byte - 1 : 0);
  }
}

bool StartsWithBrace(std::string_view bytes) {
  for (char c : bytes) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{';
  }
  return false;
}

bool EndsWith(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

}  // namespace

TreeDocument IngestHtml(std::string_view bytes) {
  if (Trim(bytes).empty()) throw ParseError("empty document", 0);
  return TreeDocument(HtmlParser(bytes).Parse());
}

TreeDocument IngestTreeJson(std::string_view bytes) {
  if (Trim(bytes).empty()) throw ParseError("empty document", 0);
  return TreeDocument(NodeFromJson(ParseJson(bytes)));
}

TreeDocument IngestTree(std::string_view bytes) {
  if (Trim(bytes).empty()) throw ParseError("empty document", 0);
  return StartsWithBrace(bytes) ? IngestTreeJson(bytes) : IngestHtml(bytes);
}

std::string SerializeTree(const TreeDocument& doc) {
  return NodeToJson(doc.root()).dump(1, ' ') + "\n";
}

BoxDocument IngestBoxes(std::string_view bytes, double row_tolerance) {
  if (Trim(bytes).empty()) throw ParseError("empty box file", 0);
  const json j = ParseJson(bytes);
  if (!j.is_array()) throw ParseError("box file must be a JSON array");
  std::vector<TextBox> boxes;
  for (size_t i = 0; i < j.size(); ++i) {
    const json& b = j[i];
    const std::string where = "box " + std::to_string(i);
    if (!b.is_object()) throw ParseError(where + " must be an object");
    TextBox box;
    auto text = b.find("text");
    if (text == b.end() || !text->is_string()) {
      throw ParseError(where + " needs a string \"text\"");
    }
    box.text = text->get<std::string>();
    for (auto [key, field] : {std::pair{"x", &box.x}, std::pair{"y", &box.y},
                              std::pair{"w", &box.w}, std::pair{"h", &box.h}}) {
      auto v = b.find(key);
      if (v == b.end() || !v->is_number()) {
        throw ParseError(where + " needs a numeric \"" + key + "\"");
      }
      *field = v->get<double>();
    }
    boxes.push_back(std::move(box));
  }
  return BoxDocument(std::move(boxes), row_tolerance);
}

std::string SerializeBoxes(const BoxDocument& doc) {
  std::string out = "[\n";
  for (int i = 0; i < doc.size(); ++i) {
    const TextBox& b = doc.box(i);
    ordered_json j;
    j["text"] = b.text;
    j["x"] = b.x;
    j["y"] = b.y;
    j["w"] = b.w;
    j["h"] = b.h;
    out += " " + j.dump();
    out += i + 1 < doc.size() ? ",\n" : "\n";
  }
  return out + "]\n";
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteFile(const std::string& path, std::string_view bytes) {
  const std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

std::string DocumentIdFromPath(const std::string& path) {
  std::string name = std::filesystem::path(path).filename().string();
  for (std::string_view ext :
       {".boxes.json", ".tree.json", ".json", ".html", ".htm"}) {
    if (EndsWith(name, ext)) return name.substr(0, name.size() - ext.size());
  }
  return name;
}

Document LoadDocument(const std::string& path, double row_tolerance) {
  const std::string bytes = ReadFile(path);
  Document doc;
  doc.id = DocumentIdFromPath(path);
  try {
    if (EndsWith(path, ".boxes.json")) {
      doc.content = IngestBoxes(bytes, row_tolerance);
    } else if (EndsWith(path, ".html") || EndsWith(path, ".htm")) {
      doc.content = IngestHtml(bytes);
    } else {
      doc.content = IngestTree(bytes);
    }
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
  return doc;
}

}  // namespace lrx
