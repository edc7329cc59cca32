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
#ifndef LRX_BOX_GEOMETRY_H_
#define LRX_BOX_GEOMETRY_H_

#include <optional>
#include <string_view>
#include <vector>

#include "lrx/docmodel.h"

namespace lrx {

enum class Direction { kTop, kLeft, kRight, kBottom };

inline constexpr Direction kAllDirections[] = {
    Direction::kTop, Direction::kLeft, Direction::kRight, Direction::kBottom};

std::string_view ToString(Direction dir);
Direction ParseDirection(std::string_view name);

// Boxes whose center lies strictly beyond `from`'s center in `dir` and whose
// perpendicular interval overlaps `from`'s by at least `min_overlap` of the
// shorter of the two. Nearest center first; ties in document order.
std::vector<int> Neighbors(const BoxDocument& doc, int from, Direction dir,
                           double min_overlap = 0.25);

// The box immediately next to `from` in `dir`: center inside the 90 degree
// cone around `dir`, perpendicular projections overlapping, and the gap
// between the facing edges at most `radius` times `from`'s extent along
// `dir`. nullopt when there is none.
std::optional<int> AdjacentBox(const BoxDocument& doc, int from, Direction dir,
                               double radius = 3.0);

}  // namespace lrx

#endif  // LRX_BOX_GEOMETRY_H_
