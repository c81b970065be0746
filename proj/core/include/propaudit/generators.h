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

#ifndef PROPAUDIT_GENERATORS_H_
#define PROPAUDIT_GENERATORS_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "propaudit/instance.h"

namespace propaudit {

struct GaussianConfig {
  std::size_t n = 20;
  std::size_t g = 4;
  double sigma = 0.04;
  std::uint64_t seed = 0;
  std::size_t k = 5;
};

struct GaussianSample {
  Instance instance;
  // cluster_of[i] is the latent cluster of agent i.
  std::vector<std::size_t> cluster_of;
  // g latent centers, row-major 2-D.
  std::vector<double> cluster_centers;
};

// g latent centers uniform in the unit square, agents assigned round-robin
// (cluster sizes differ by at most one) and displaced by isotropic Gaussian
// noise. The candidate set equals the agent set. Throws ConfigError unless
// n >= g >= 1, sigma >= 0 and 1 <= k <= n.
GaussianSample GenerateGaussianInstance(const GaussianConfig& config);

struct Fixture {
  Instance instance;
  Selection selection;
};

// The two six-agent, k = 3 instances separating DC-mPJR+ from mPJR.
// which = 1: M = {a, b, x1, x2, x3}, DC-mPJR+ holds and mPJR fails.
// which = 2: M = {z, x1, x2, x3}, mPJR holds and DC-mPJR+ fails.
// The selection is {x1, x2, x3} in both. Agents are named "1".."6".
Fixture IncomparabilityFixture(int which);

// Candidate order of ObjectiveFailureFixture().
enum ObjectiveFailureCandidate : std::size_t {
  kA0 = 0,
  kA1 = 1,
  kA2 = 2,
  kB1 = 3,
  kB2 = 4,
};

// A 1-D instance with n = 30, k = 3 (q = 10) where the aggregate k-median
// and k-means objectives under-serve a compact group of 2q agents.
//
// Compact group S (20 agents): 6 at -1, 8 at 0, 6 at +1, with candidates
// a0 = 0, a1 = -1, a2 = +1. Dispersed group (10 agents): 5 at b1 = 1000 and
// 5 at b2 = 1020. Scales: group gap 1000 >> 2H = 20 >> diam(S) = 2.
Instance ObjectiveFailureFixture();

// Uniform size-k subset of [0, m) by partial Fisher-Yates, returned sorted.
Selection SampleSelection(std::size_t m, std::size_t k, std::uint64_t seed);

}  // namespace propaudit

#endif  // PROPAUDIT_GENERATORS_H_
