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

#ifndef PROPAUDIT_BASELINES_H_
#define PROPAUDIT_BASELINES_H_

#include <cstddef>
#include <cstdint>

#include "propaudit/instance.h"

namespace propaudit {

struct BaselineOptions {
  std::uint64_t seed = 0;
  std::size_t restarts = 1;
  // Lloyd iteration cap.
  std::size_t max_iterations = 100;
  // k-median only: enumerate every size-k subset instead of local search.
  bool exhaustive = false;
  std::size_t exhaustive_max_candidates = 12;
};

// Sum over agents of the distance to the nearest selected center.
double KMedianCost(const Instance& instance, const Selection& selection);
// Sum over agents of the squared distance to the nearest selected center.
double KMeansCost(const Instance& instance, const Selection& selection);

// Best-improvement single-swap local search from a uniform random start; the
// best of `restarts` runs is returned. With options.exhaustive the global
// optimum is found by enumeration (SizeError above exhaustive_max_candidates).
// Cost ties keep the earlier subset.
Selection KMedianLocalSearch(const Instance& instance,
                             const BaselineOptions& options = {});

Selection KMedianExhaustive(const Instance& instance,
                            std::size_t max_candidates = 12);

// Lloyd iterations on the squared Euclidean objective where every centroid is
// snapped to the nearest candidate not already taken in that round. Best of
// `restarts` by k-means cost. Throws UnsupportedBackend on explicit metrics.
Selection KMeansLloydSnapped(const Instance& instance,
                             const BaselineOptions& options = {});

}  // namespace propaudit

#endif  // PROPAUDIT_BASELINES_H_
