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
#include "lrx/box_geometry.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "lrx/errors.h"

namespace lrx {
namespace {

bool Horizontal(Direction dir) {
  return dir == Direction::kLeft || dir == Direction::kRight;
}

// Signed offset of b's center from a's center along `dir`.
double Along(const TextBox& a, const TextBox& b, Direction dir) {
  switch (dir) {
    case Direction::kTop:
      return a.cy() - b.cy();
    case Direction::kBottom:
      return b.cy() - a.cy();
    case Direction::kLeft:
      return a.cx() - b.cx();
    case Direction::kRight:
      return b.cx() - a.cx();
  }
  return 0;
}

double Across(const TextBox& a, const TextBox& b, Direction dir) {
  return Horizontal(dir) ? std::abs(b.cy() - a.cy()) : std::abs(b.cx() - a.cx());
}

double Overlap(const TextBox& a, const TextBox& b, Direction dir) {
  if (Horizontal(dir)) {
    return std::min(a.bottom(), b.bottom()) - std::max(a.y, b.y);
  }
  return std::min(a.right(), b.right()) - std::max(a.x, b.x);
}

double Gap(const TextBox& a, const TextBox& b, Direction dir) {
  switch (dir) {
    case Direction::kTop:
      return a.y - b.bottom();
    case Direction::kBottom:
      return b.y - a.bottom();
    case Direction::kLeft:
      return a.x - b.right();
    case Direction::kRight:
      return b.x - a.right();
  }
  return 0;
}

double CenterDistance(const TextBox& a, const TextBox& b) {
  return std::hypot(a.cx() - b.cx(), a.cy() - b.cy());
}

std::vector<int> SortedByDistance(const BoxDocument& doc, int from,
                                  std::vector<int> ids) {
  const TextBox& a = doc.box(from);
  std::stable_sort(ids.begin(), ids.end(), [&](int x, int y) {
    return CenterDistance(a, doc.box(x)) < CenterDistance(a, doc.box(y));
  });
  return ids;
}

}  // namespace

std::string_view ToString(Direction dir) {
  switch (dir) {
    case Direction::kTop:
      return "Top";
    case Direction::kLeft:
      return "Left";
    case Direction::kRight:
      return "Right";
    case Direction::kBottom:
      return "Bottom";
  }
  return "?";
}

Direction ParseDirection(std::string_view name) {
  for (Direction d : kAllDirections) {
    if (ToString(d) == name) return d;
  }
  throw ParseError("unknown direction " + std::string(name));
}

std::vector<int> Neighbors(const BoxDocument& doc, int from, Direction dir,
                           double min_overlap) {
  const TextBox& a = doc.box(from);
  std::vector<int> ids;
  for (int i = 0; i < doc.size(); ++i) {
    if (i == from) continue;
    const TextBox& b = doc.box(i);
    if (Along(a, b, dir) <= 0) continue;
    const double shorter = Horizontal(dir) ? std::min(a.h, b.h)
                                           : std::min(a.w, b.w);
    if (Overlap(a, b, dir) < min_overlap * shorter) continue;
    ids.push_back(i);
  }
  return SortedByDistance(doc, from, std::move(ids));
}

std::optional<int> AdjacentBox(const BoxDocument& doc, int from, Direction dir,
                               double radius) {
  const TextBox& a = doc.box(from);
  const double extent = Horizontal(dir) ? a.w : a.h;
  std::vector<int> ids;
  for (int i = 0; i < doc.size(); ++i) {
    if (i == from) continue;
    const TextBox& b = doc.box(i);
    const double along = Along(a, b, dir);
    if (along <= 0 || Across(a, b, dir) > along) continue;
    if (Overlap(a, b, dir) <= 0) continue;
    if (Gap(a, b, dir) > radius * extent) continue;
    ids.push_back(i);
  }
  if (ids.empty()) return std::nullopt;
  return SortedByDistance(doc, from, std::move(ids)).front();
}

}  // namespace lrx
