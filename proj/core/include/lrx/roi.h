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
// Regions of interest: which landmark occurrence anchors which annotated
// locations, and the geometric features used to score landmarks.

#ifndef LRX_ROI_H_
#define LRX_ROI_H_

#include <string>
#include <vector>

#include "lrx/docmodel.h"

namespace lrx {

// One landmark occurrence with the annotated locations nearest to it.
struct RoiInstance {
  Location landmark;
  std::vector<Location> locations;  // document order
  std::vector<std::string> values;  // aligned with `locations`
};

// Assigns every annotated location to its nearest occurrence (trees: deepest
// common ancestor, then pre-order gap; boxes: center distance) and returns
// the occurrences that received at least one, in document order.
std::vector<RoiInstance> AssignInstances(const Document& doc,
                                         const Annotation& ann,
                                         const std::vector<Location>& occurrences);

// Enclosing region of an instance: landmark plus its locations.
Region InstanceRegion(const Document& doc, const RoiInstance& inst);

// Expected value of one region of a box field: the instance values joined.
std::string JoinedValue(const RoiInstance& inst, const Aggregation& agg);

struct RoiFeatures {
  double distance = 0;  // trees: path nodes + pre-order gap; boxes: center
                        // distance in median box heights
  double size = 0;      // trees: region nodes; boxes: area in squared median
                        // box heights
};

// Mean features over the instance's locations.
RoiFeatures InstanceFeatures(const Document& doc, const RoiInstance& inst);

}  // namespace lrx

#endif  // LRX_ROI_H_
