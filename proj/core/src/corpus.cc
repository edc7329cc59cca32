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

#include <algorithm>
#include <cstdio>
#include <random>

#include <nlohmann/json.hpp>

#include "lrx/annotation_io.h"
#include "lrx/errors.h"
#include "lrx/ingest.h"
#include "lrx/text.h"

namespace lrx {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;
using Rng = std::mt19937_64;

// Raw modulo keeps the output identical across standard libraries.
int Uniform(Rng& r, int lo, int hi) {
  return lo + static_cast<int>(r() % static_cast<std::uint64_t>(hi - lo + 1));
}

template <typename T>
const T& Pick(Rng& r, const std::vector<T>& v) {
  return v[r() % v.size()];
}

template <typename T>
void Shuffle(Rng& r, std::vector<T>& v) {
  for (size_t i = v.size(); i > 1; --i) {
    std::swap(v[i - 1], v[r() % i]);
  }
}

std::string RandomChars(Rng& r, std::string_view alphabet, int n) {
  std::string s;
  for (int i = 0; i < n; ++i) s += alphabet[r() % alphabet.size()];
  return s;
}

constexpr std::string_view kUpper = "ABCDEFGHJKLMNPRSTUVWXYZ";
constexpr std::string_view kDigits = "0123456789";
constexpr std::string_view kUpperDigits = "ABCDEFGHJKLMNPRSTUVWXYZ0123456789";

const std::vector<std::string> kWeekdays = {"Monday", "Tuesday", "Wednesday",
                                            "Thursday", "Friday", "Saturday",
                                            "Sunday"};
const std::vector<std::string> kMonths = {"Jan", "Feb", "Mar", "Apr", "May", "Jun",
                                          "Jul", "Aug", "Sep", "Oct", "Nov", "Dec"};
const std::vector<std::string> kAirlines = {"UA", "DL", "AA", "BA", "LH", "AF", "KL"};
const std::vector<std::pair<std::string, std::string>> kCities = {
    {"Denver", "DEN"},  {"Boston", "BOS"},   {"Chicago", "ORD"},
    {"Seattle", "SEA"}, {"Atlanta", "ATL"},  {"Dallas", "DFW"},
    {"Miami", "MIA"},   {"Phoenix", "PHX"},  {"Houston", "IAH"},
    {"Portland", "PDX"}, {"Newark", "EWR"},  {"Orlando", "MCO"}};
const std::vector<std::string> kFirstNames = {"Ada", "Grace", "Alan", "Edsger",
                                              "Barbara", "Donald", "Frances",
                                              "Ken", "Radia", "Leslie"};
const std::vector<std::string> kLastNames = {"Lovelace", "Hopper", "Turing",
                                             "Dijkstra", "Liskov", "Knuth",
                                             "Allen", "Thompson", "Perlman",
                                             "Lamport"};
const std::vector<std::string> kRemarkWords = {"vehicle", "checked", "delivered",
                                               "warranty", "service", "inspected",
                                               "registered", "cleared"};

constexpr const char* kGoldAttr = "data-lrx-gold";
constexpr const char* kValueAttr = "data-lrx-value";
constexpr const char* kLandmarkAttr = "data-lrx-landmark";

const char* kAdTail = " today for your dream destination!";

// "Friday, Apr 3 8:18 PM" and its value "8:18 PM". Rail times sit on the
// hour or half hour, flight times never do.
std::pair<std::string, std::string> TimeText(Rng& r, bool rail) {
  int minute = rail ? 30 * Uniform(r, 0, 1) : Uniform(r, 1, 58);
  if (!rail && minute == 30) minute = 31;
  char buf[16];
  std::snprintf(buf, sizeof buf, "%d:%02d %s", Uniform(r, 1, 12), minute,
                Uniform(r, 0, 1) ? "PM" : "AM");
  const std::string value = buf;
  const std::string shown = Pick(r, kWeekdays) + ", " + Pick(r, kMonths) + " " +
                            std::to_string(Uniform(r, 1, 28)) + " " + value;
  return {shown, value};
}

std::string DateText(Rng& r) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%02d/%02d/%d", Uniform(r, 1, 28),
                Uniform(r, 1, 12), Uniform(r, 2015, 2024));
  return buf;
}

std::string MoneyText(Rng& r) {
  const int dollars = Uniform(r, 100, 99999);
  std::string d = std::to_string(dollars);
  if (d.size() > 3) d.insert(d.size() - 3, ",");
  char buf[8];
  std::snprintf(buf, sizeof buf, ".%02d", Uniform(r, 0, 99));
  return "$" + d + buf;
}

// ---------------------------------------------------------------------------
// Flights

TreeNode El(std::string tag, std::string text = {},
            std::vector<TreeNode> children = {}) {
  TreeNode n;
  n.tag = std::move(tag);
  n.own_text = std::move(text);
  n.children = std::move(children);
  return n;
}

TreeNode WithClass(TreeNode n, std::string cls) {
  n.attributes["class"] = std::move(cls);
  return n;
}

TreeNode LabelRow(const std::string& label, const std::string& field,
                  const std::string& shown, const std::string& value) {
  TreeNode l = El("td", label);
  TreeNode v = El("td", shown);
  if (!field.empty()) {
    l.attributes[kLandmarkAttr] = field;
    v.attributes[kGoldAttr] = field;
    v.attributes[kValueAttr] = value;
  }
  return El("tr", "", {std::move(l), std::move(v)});
}

TreeNode Leg(Rng& r) {
  const std::string code =
      Pick(r, kAirlines) + " " + std::to_string(Uniform(r, 10, 9999));
  auto [dshown, dvalue] = TimeText(r, false);
  auto [ashown, avalue] = TimeText(r, false);
  const auto& [city, iata] = Pick(r, kCities);
  TreeNode table = El("table", "", {
      LabelRow("Flight:", "flight_number", code, code),
      LabelRow("Depart:", "depart_time", dshown, dvalue),
      LabelRow("Arrive:", "arrive_time", ashown, avalue),
      LabelRow("From:", "origin", city + " (" + iata + ")", iata),
  });
  return WithClass(El("div", "", {El("h3", "AIR"), std::move(table)}), "leg");
}

TreeNode Rail(Rng& r) {
  auto [dshown, dvalue] = TimeText(r, true);
  auto [ashown, avalue] = TimeText(r, true);
  TreeNode table = El("table", "", {
      LabelRow("Train:", "", "Amtrak " + std::to_string(Uniform(r, 10, 999)), ""),
      LabelRow("Depart:", "", dshown, ""),
      LabelRow("Arrive:", "", ashown, ""),
  });
  return WithClass(El("div", "", {El("h3", "RAIL"), std::move(table)}), "rail");
}

TreeNode Summary(Rng& r) {
  const std::string locator = RandomChars(r, kUpperDigits, 6);
  const std::string name = Pick(r, kFirstNames) + " " + Pick(r, kLastNames);
  TreeNode table = El("table", "", {
      LabelRow("Record Locator:", "record_locator", locator, locator),
      LabelRow("Passenger:", "passenger", name, name),
  });
  return WithClass(El("div", "", {std::move(table)}), "summary");
}

// Finds the child list holding the flight legs.
std::vector<TreeNode>* LegContainer(TreeNode& n) {
  for (auto& c : n.children) {
    auto it = c.attributes.find("class");
    if (it != c.attributes.end() && it->second == "leg") return &n.children;
  }
  for (auto& c : n.children) {
    if (auto* found = LegContainer(c)) return found;
  }
  return nullptr;
}

std::vector<size_t> LegIndices(const std::vector<TreeNode>& v) {
  std::vector<size_t> out;
  for (size_t i = 0; i < v.size(); ++i) {
    auto it = v[i].attributes.find("class");
    if (it != v[i].attributes.end() && it->second == "leg") out.push_back(i);
  }
  return out;
}

void MarkLandmarks(TreeNode& n, const std::string& field) {
  auto it = n.attributes.find(kLandmarkAttr);
  if (it != n.attributes.end() && it->second == field) n.tag = "th";
  for (auto& c : n.children) MarkLandmarks(c, field);
}

struct GoldNode {
  std::string field;
  TreePath path;
  std::string value;
};

void CollectGold(TreeNode& n, TreePath& path, std::vector<GoldNode>& out) {
  auto g = n.attributes.find(kGoldAttr);
  if (g != n.attributes.end()) {
    out.push_back({g->second, path, n.attributes[kValueAttr]});
  }
  n.attributes.erase(kGoldAttr);
  n.attributes.erase(kValueAttr);
  n.attributes.erase(kLandmarkAttr);
  for (size_t i = 0; i < n.children.size(); ++i) {
    path.steps.push_back(static_cast<int>(i));
    CollectGold(n.children[i], path, out);
    path.steps.pop_back();
  }
}

const std::string& PickField(Rng& r, Template t, const std::string& requested) {
  if (!requested.empty()) return requested;
  return Pick(r, TemplateFields(t)).name;
}

std::pair<Document, DocAnnotations> MakeFlights(Rng& r, int layout,
                                                const CorpusOptions& o,
                                                std::string* target) {
  std::vector<TreeNode> legs;
  const int nlegs = Uniform(r, 1, 3);
  for (int i = 0; i < nlegs; ++i) legs.push_back(Leg(r));
  std::vector<TreeNode> body;
  switch (layout) {
    case 0:
      body.push_back(WithClass(El("div", "", {El("h1", "Skyway Travel"),
                                              El("p", "Thank you for booking")}),
                               "brand"));
      body.push_back(Summary(r));
      for (auto& l : legs) body.push_back(std::move(l));
      body.push_back(WithClass(El("p", "Fares are non-refundable."), "legal"));
      break;
    case 1: {
      body.push_back(WithClass(
          El("table", "", {El("tr", "", {El("td", "Booking confirmation")})}),
          "banner"));
      body.push_back(Summary(r));
      std::vector<TreeNode> itinerary = {El("h2", "Itinerary")};
      for (auto& l : legs) itinerary.push_back(std::move(l));
      body.push_back(WithClass(El("div", "", std::move(itinerary)), "itinerary"));
      break;
    }
    default:
      body.push_back(WithClass(El("div", "", {El("span", "Your trip receipt")}), "top"));
      for (auto& l : legs) body.push_back(std::move(l));
      body.push_back(Rail(r));
      body.push_back(Summary(r));
      body.push_back(WithClass(El("div", "", {El("a", "Contact us")}), "help"));
      break;
  }

  switch (o.perturbation) {
    case Perturbation::kInsertSectionOutsideRoi: {
      TreeNode promo = WithClass(
          El("div", "", {El("h3", "Frequent flyer"),
                         El("table", "", {LabelRow("Miles earned:", "",
                                                   std::to_string(Uniform(r, 100, 9999)),
                                                   "")})}),
          "promo");
      const size_t at = static_cast<size_t>(Uniform(r, 0, static_cast<int>(body.size())));
      body.insert(body.begin() + static_cast<std::ptrdiff_t>(at), std::move(promo));
      break;
    }
    case Perturbation::kPermuteSections:
      Shuffle(r, body);
      break;
    case Perturbation::kInsertAdBanner: {
      const std::string phrase = Pick(r, TemplateFields(Template::kFlights)).landmark;
      TreeNode ad = WithClass(El("div", "", {El("p", phrase + kAdTail)}), "ad");
      const size_t at = static_cast<size_t>(Uniform(r, 0, static_cast<int>(body.size())));
      body.insert(body.begin() + static_cast<std::ptrdiff_t>(at), std::move(ad));
      break;
    }
    default:
      break;
  }
  TreeNode root = El("html", "", {El("body", "", std::move(body))});
  if (o.perturbation == Perturbation::kDuplicateRoi ||
      o.perturbation == Perturbation::kRemoveRoi) {
    std::vector<TreeNode>* c = LegContainer(root);
    const auto idx = LegIndices(*c);
    const size_t pick = idx[r() % idx.size()];
    if (o.perturbation == Perturbation::kDuplicateRoi) {
      TreeNode copy = (*c)[pick];
      c->insert(c->begin() + static_cast<std::ptrdiff_t>(pick) + 1, std::move(copy));
    } else if (idx.size() > 1) {
      c->erase(c->begin() + static_cast<std::ptrdiff_t>(pick));
    }
  }
  if (o.perturbation == Perturbation::kMutateInsideRoi) {
    *target = PickField(r, Template::kFlights, o.target_field);
    MarkLandmarks(root, *target);
  }

  std::vector<GoldNode> gold;
  TreePath path;
  CollectGold(root, path, gold);
  DocAnnotations anns;
  for (const auto& f : TemplateFields(Template::kFlights)) {
    Annotation a;
    a.agg = f.agg;
    for (const auto& g : gold) {
      if (g.field != f.name) continue;
      a.locations.push_back(g.path);
      a.values.push_back(g.value);
    }
    if (!a.locations.empty()) anns[f.name] = std::move(a);
  }
  Document doc;
  doc.content = TreeDocument(std::move(root));
  return {std::move(doc), std::move(anns)};
}

// ---------------------------------------------------------------------------
// Invoices

constexpr double kCharWidth = 9;
constexpr double kBoxHeight = 20;
constexpr double kBlockGap = 100;

struct GBox {
  TextBox box;
  std::string field;
  std::string value;
  std::string landmark_of;
};

GBox Box(std::string text, double x, double y = 0, std::string field = {},
         std::string value = {}, std::string landmark_of = {}) {
  const double w = kCharWidth * static_cast<double>(text.size());
  return {{std::move(text), x, y, w, kBoxHeight}, std::move(field),
          std::move(value), std::move(landmark_of)};
}

// Rows of boxes; a box's y is its offset inside the row.
struct Block {
  std::vector<std::vector<GBox>> rows;
  double spacing = 30;
  bool part_rows = false;
};

Block Header(int layout) {
  Block b;
  switch (layout) {
    case 0: b.rows = {{Box("TAX INVOICE", 40)}}; break;
    case 1: b.rows = {{Box("Dealer Copy", 40), Box("TAX INVOICE", 300)}}; break;
    default: b.rows = {{Box("Retail Invoice", 40)}}; break;
  }
  return b;
}

Block Ids(Rng& r) {
  const std::string no = "INV-" + RandomChars(r, kDigits, 5);
  const std::string date = DateText(r);
  Block b;
  b.rows = {{Box("Invoice No", 40, 0, {}, {}, "invoice_no"),
             Box(no, 200, 0, "invoice_no", no)},
            {Box("Invoice Date", 40, 0, {}, {}, "invoice_date"),
             Box(date, 200, 0, "invoice_date", date)}};
  return b;
}

// A 17-character identifier split into `parts` pieces that each hold a
// letter, laid out left to right with the first piece centered under the
// label.
std::vector<GBox> ChassisParts(Rng& r, int parts, double label_center) {
  std::vector<int> lengths(parts, 3);
  for (int left = 17 - 3 * parts; left > 0; --left) ++lengths[r() % parts];
  std::vector<std::string> pieces;
  for (int len : lengths) {
    std::string p = RandomChars(r, kUpperDigits, len);
    p[r() % p.size()] = kUpper[r() % kUpper.size()];
    pieces.push_back(std::move(p));
  }
  const std::string value = Join(pieces, " ");
  std::vector<GBox> out;
  double x = label_center - kCharWidth * static_cast<double>(pieces[0].size()) / 2;
  for (auto& p : pieces) {
    GBox b = Box(p, x, 0, "chassis_number", value);
    x = b.box.right() + kCharWidth;
    out.push_back(std::move(b));
  }
  return out;
}

Block Vehicle(Rng& r, int index) {
  const GBox chassis = Box("Chassis number", 40, 0, {}, {}, "chassis_number");
  const GBox engine = Box("Engine number", 400);
  const GBox reg = Box("Reg Date", 600);
  std::vector<GBox> values = ChassisParts(r, 1 + (index / 2) % 4, chassis.box.cx());
  if (index % 2 == 0) {
    std::string digits = RandomChars(r, "123456789", 1) + RandomChars(r, kDigits, 12);
    GBox e = Box(std::move(digits), 0);
    e.box.x = engine.box.cx() - e.box.w / 2;
    values.push_back(std::move(e));
  }
  GBox d = Box(DateText(r), 0);
  d.box.x = reg.box.cx() - d.box.w / 2;
  values.push_back(std::move(d));
  Block b;
  b.rows = {{chassis, engine, reg}, std::move(values)};
  return b;
}

std::vector<GBox> PartRow(Rng& r) {
  const std::string no = "PN-" + RandomChars(r, kDigits, 5);
  return {Box("Part No", 40, 0, {}, {}, "part_no"), Box(no, 160, 0, "part_no", no),
          Box("Qty", 320), Box(std::to_string(Uniform(r, 1, 20)), 380)};
}

// Rows far enough apart that their labels do not see each other.
Block Parts(Rng& r) {
  Block b;
  b.spacing = 90;
  b.part_rows = true;
  const int n = Uniform(r, 1, 3);
  for (int i = 0; i < n; ++i) b.rows.push_back(PartRow(r));
  return b;
}

Block Total(Rng& r) {
  const std::string v = MoneyText(r);
  Block b;
  b.rows = {{Box("Total Amount", 40, 0, {}, {}, "total_amount"),
             Box(v, 220, 0, "total_amount", v)}};
  return b;
}

Block Remarks(Rng& r) {
  Block b;
  b.rows = {{Box("Dealer Remarks", 40)},
            {Box("Remarks", 40), Box(Pick(r, kRemarkWords) + " " + Pick(r, kRemarkWords), 200)}};
  return b;
}

std::vector<GBox> Layout(const std::vector<Block>& blocks) {
  std::vector<GBox> out;
  double y = 40;
  for (const auto& b : blocks) {
    for (size_t i = 0; i < b.rows.size(); ++i) {
      for (GBox g : b.rows[i]) {
        g.box.y += y + b.spacing * static_cast<double>(i);
        out.push_back(std::move(g));
      }
    }
    y += b.spacing * static_cast<double>(b.rows.size() - 1) + kBoxHeight + kBlockGap;
  }
  return out;
}

std::pair<Document, DocAnnotations> MakeInvoice(Rng& r, int layout, int index,
                                                const CorpusOptions& o,
                                                std::string* target) {
  std::vector<Block> blocks = {Header(layout), Ids(r), Vehicle(r, index), Parts(r),
                               Total(r)};
  if (layout == 2) {
    Block notes;
    notes.rows = {{Box("Notes", 40), Box("Thank you for your business", 200)}};
    blocks.push_back(std::move(notes));
  }
  auto parts = [&]() -> Block& {
    return *std::find_if(blocks.begin(), blocks.end(),
                         [](const Block& b) { return b.part_rows; });
  };
  switch (o.perturbation) {
    case Perturbation::kInsertSectionOutsideRoi: {
      const auto at = Uniform(r, 0, static_cast<int>(blocks.size()));
      blocks.insert(blocks.begin() + at, Remarks(r));
      break;
    }
    case Perturbation::kPermuteSections:
      Shuffle(r, blocks);
      break;
    case Perturbation::kDuplicateRoi: {
      Block& p = parts();
      const size_t pick = r() % p.rows.size();
      auto copy = p.rows[pick];
      p.rows.insert(p.rows.begin() + static_cast<std::ptrdiff_t>(pick) + 1, std::move(copy));
      break;
    }
    case Perturbation::kRemoveRoi: {
      Block& p = parts();
      const size_t pick = r() % p.rows.size();
      if (p.rows.size() > 1) p.rows.erase(p.rows.begin() + static_cast<std::ptrdiff_t>(pick));
      break;
    }
    case Perturbation::kInsertAdBanner: {
      Block ad;
      ad.rows = {{Box(Pick(r, TemplateFields(Template::kInvoice)).landmark + kAdTail, 40)}};
      const auto at = Uniform(r, 0, static_cast<int>(blocks.size()));
      blocks.insert(blocks.begin() + at, std::move(ad));
      break;
    }
    default:
      break;
  }
  std::vector<GBox> boxes = Layout(blocks);
  for (auto& g : boxes) {
    g.box.x += Uniform(r, -2, 2);
    g.box.y += Uniform(r, -2, 2);
  }
  if (o.perturbation == Perturbation::kMutateInsideRoi) {
    // A copy of the label lands directly above each landmark; rows from the
    // landmark's down move one row lower to make room.
    *target = PickField(r, Template::kInvoice, o.target_field);
    std::vector<TextBox> marks;
    for (const auto& g : boxes) {
      if (g.landmark_of == *target) marks.push_back(g.box);
    }
    std::sort(marks.begin(), marks.end(),
              [](const TextBox& a, const TextBox& b) { return a.y > b.y; });
    for (const auto& m : marks) {
      for (auto& g : boxes) {
        if (g.box.y >= m.y - 5) g.box.y += 30;
      }
      boxes.push_back({m, {}, {}, {}});
    }
  }
  if (o.perturbation == Perturbation::kTranslateBoxes) {
    const int dx = Uniform(r, 5, 200), dy = Uniform(r, 5, 200);
    for (auto& g : boxes) {
      g.box.x += dx;
      g.box.y += dy;
    }
  }

  std::vector<TextBox> raw;
  for (const auto& g : boxes) raw.push_back(g.box);
  const std::vector<int> order = DocumentOrder(raw);
  DocAnnotations anns;
  for (const auto& f : TemplateFields(Template::kInvoice)) {
    Annotation a;
    a.agg = f.agg;
    std::string joined;
    for (size_t i = 0; i < order.size(); ++i) {
      const GBox& g = boxes[order[i]];
      if (g.field != f.name) continue;
      a.locations.push_back(BoxIndex{static_cast<int>(i)});
      if (f.agg.kind == AggKind::kOrderedList) {
        a.values.push_back(g.value);
      } else {
        joined = g.value;
      }
    }
    if (a.locations.empty()) continue;
    if (f.agg.kind != AggKind::kOrderedList) a.values = {joined};
    anns[f.name] = std::move(a);
  }
  Document doc;
  doc.content = BoxDocument(std::move(raw));
  return {std::move(doc), std::move(anns)};
}

std::string DocId(const CorpusOptions& o, int index) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%04d", index);
  std::string id = std::string(ToString(o.tmpl)) + "-" + std::to_string(o.seed) + "-" + buf;
  if (o.perturbation != Perturbation::kNone) id += "-" + std::string(ToString(o.perturbation));
  return id;
}

}  // namespace

std::string_view ToString(Template t) {
  return t == Template::kFlights ? "flights" : "invoice";
}

Template ParseTemplate(std::string_view name) {
  if (name == "flights") return Template::kFlights;
  if (name == "invoice") return Template::kInvoice;
  throw Error("unknown template '" + std::string(name) + "'");
}

namespace {
const std::vector<std::pair<Perturbation, std::string_view>> kPerturbationNames = {
    {Perturbation::kNone, "none"},
    {Perturbation::kInsertSectionOutsideRoi, "insert_section"},
    {Perturbation::kPermuteSections, "permute_sections"},
    {Perturbation::kDuplicateRoi, "duplicate_roi"},
    {Perturbation::kRemoveRoi, "remove_roi"},
    {Perturbation::kMutateInsideRoi, "mutate_inside_roi"},
    {Perturbation::kTranslateBoxes, "translate_boxes"},
    {Perturbation::kInsertAdBanner, "ad_banner"},
};
}  // namespace

std::string_view ToString(Perturbation p) {
  for (const auto& [k, v] : kPerturbationNames) {
    if (k == p) return v;
  }
  return "none";
}

Perturbation ParsePerturbation(std::string_view name) {
  for (const auto& [k, v] : kPerturbationNames) {
    if (v == name) return k;
  }
  throw Error("unknown perturbation '" + std::string(name) + "'");
}

const std::vector<TemplateField>& TemplateFields(Template t) {
  static const std::vector<TemplateField> flights = {
      {"record_locator", "Record Locator:", {AggKind::kSingle, ""}},
      {"passenger", "Passenger:", {AggKind::kSingle, ""}},
      {"flight_number", "Flight:", {AggKind::kOrderedList, ""}},
      {"depart_time", "Depart:", {AggKind::kOrderedList, ""}},
      {"arrive_time", "Arrive:", {AggKind::kOrderedList, ""}},
      {"origin", "From:", {AggKind::kOrderedList, ""}},
  };
  static const std::vector<TemplateField> invoice = {
      {"invoice_no", "Invoice No", {AggKind::kSingle, ""}},
      {"invoice_date", "Invoice Date", {AggKind::kSingle, ""}},
      {"chassis_number", "Chassis number", {AggKind::kConcat, " "}},
      {"part_no", "Part No", {AggKind::kOrderedList, ""}},
      {"total_amount", "Total Amount", {AggKind::kSingle, ""}},
  };
  return t == Template::kFlights ? flights : invoice;
}

Corpus GenerateCorpus(const CorpusOptions& options) {
  if (options.count < 0) throw Error("negative document count");
  Corpus corpus;
  for (int i = 0; i < options.count; ++i) {
    const int index = options.first_index + i;
    Rng r(options.seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(index));
    const int layout = index % 3;
    CorpusEntry e;
    e.id = DocId(options, index);
    e.index = index;
    e.layout = layout;
    e.perturbation = ToString(options.perturbation);
    auto [doc, anns] = options.tmpl == Template::kFlights
                           ? MakeFlights(r, layout, options, &e.target_field)
                           : MakeInvoice(r, layout, index, options, &e.target_field);
    doc.id = e.id;
    e.file = e.id + (doc.kind() == DocKind::kTree ? ".tree.json" : ".boxes.json");
    corpus.annotations[e.id] = std::move(anns);
    corpus.docs.push_back(std::move(doc));
    corpus.entries.push_back(std::move(e));
  }
  return corpus;
}

void WriteCorpus(const Corpus& corpus, const std::string& dir) {
  ordered_json manifest;
  manifest["documents"] = ordered_json::array();
  for (size_t i = 0; i < corpus.docs.size(); ++i) {
    const Document& doc = corpus.docs[i];
    const CorpusEntry& e = corpus.entries[i];
    WriteFile(dir + "/" + e.file, doc.kind() == DocKind::kTree
                                      ? SerializeTree(doc.tree())
                                      : SerializeBoxes(doc.boxes()));
    ordered_json je;
    je["id"] = e.id;
    je["file"] = e.file;
    je["index"] = e.index;
    je["layout"] = e.layout;
    je["perturbation"] = e.perturbation;
    if (!e.target_field.empty()) je["target_field"] = e.target_field;
    manifest["documents"].push_back(std::move(je));
  }
  WriteFile(dir + "/annotations.json", SerializeAnnotations(corpus.annotations));
  WriteFile(dir + "/manifest.json", manifest.dump(1, ' ') + "\n");
}

Corpus LoadCorpus(const std::string& dir) {
  Corpus corpus;
  json manifest;
  try {
    manifest = json::parse(ReadFile(dir + "/manifest.json"));
    for (const auto& je : manifest.at("documents")) {
      CorpusEntry e;
      e.id = je.at("id").get<std::string>();
      e.file = je.at("file").get<std::string>();
      e.index = je.value("index", 0);
      e.layout = je.value("layout", 0);
      e.perturbation = je.value("perturbation", "none");
      e.target_field = je.value("target_field", "");
      Document doc = LoadDocument(dir + "/" + e.file);
      doc.id = e.id;
      corpus.docs.push_back(std::move(doc));
      corpus.entries.push_back(std::move(e));
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad corpus manifest: ") + e.what());
  }
  corpus.annotations = ParseAnnotations(ReadFile(dir + "/annotations.json"));
  return corpus;
}

}  // namespace lrx
