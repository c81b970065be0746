// Copyright 2026 The propaudit Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PROPAUDIT_SEAR_H_
#define PROPAUDIT_SEAR_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "propaudit/instance.h"

namespace propaudit {

// Weights are integers in units of 1/k: every agent starts at k and a
// selected center consumes exactly n units.
struct SearCharge {
  std::size_t agent = 0;
  std::int64_t amount = 0;
};

struct SearStep {
  std::size_t candidate = 0;
  double radius = 0.0;
  std::int64_t ball_weight = 0;
  std::vector<SearCharge> charges;
};

struct SearResult {
  Selection selection;
  // Selections in the order they were made.
  std::vector<SearStep> trace;
  std::vector<std::int64_t> final_weights;
};

// Spatial Expanding Approval Rule.
//
// Grows a common radius over the sorted distinct agent-candidate distances.
// At the current radius a remaining candidate is affordable when the weight
// in its closed ball reaches n (in 1/k units); the affordable candidate with
// the heaviest ball is taken (lowest index on ties) and its ball is charged n
// units, agents drained in ascending index order. Affordability is re-tested
// at the same radius after every pick. The result satisfies mPJR+.
SearResult RunSear(const Instance& instance);

}  // namespace propaudit

#endif  // PROPAUDIT_SEAR_H_
