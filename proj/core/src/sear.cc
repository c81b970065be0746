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

#include "propaudit/sear.h"

#include <algorithm>
#include <cstdint>
#include <tuple>

#include "propaudit/errors.h"

namespace propaudit {

SearResult RunSear(const Instance& instance) {
  const std::size_t n = instance.num_agents();
  const std::size_t m = instance.num_candidates();
  const std::size_t k = instance.k();
  const auto quota_units = static_cast<std::int64_t>(n);

  struct Pair {
    double distance;
    std::size_t agent;
    std::size_t candidate;
  };
  std::vector<Pair> pairs;
  pairs.reserve(n * m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < m; ++c) {
      pairs.push_back({instance.AgentToCandidate(i, c), i, c});
    }
  }
  std::sort(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
    return std::tie(a.distance, a.agent, a.candidate) <
           std::tie(b.distance, b.agent, b.candidate);
  });

  std::vector<std::int64_t> weight(n, static_cast<std::int64_t>(k));
  // Weight inside the closed ball of each candidate at the current radius.
  std::vector<std::int64_t> ball(m, 0);
  std::vector<char> available(m, 1);
  std::vector<std::size_t> chosen;
  SearResult result;

  std::size_t next = 0;
  while (chosen.size() < k) {
    if (next >= pairs.size()) {
      // Every ball holds all agents by now and the remaining weight is
      // (k - |W|) n >= n, so this cannot happen for k <= m.
      throw Error("SEAR ran out of radii");
    }
    const double radius = pairs[next].distance;
    while (next < pairs.size() && pairs[next].distance == radius) {
      ball[pairs[next].candidate] += weight[pairs[next].agent];
      ++next;
    }
    for (;;) {
      std::size_t best = m;
      for (std::size_t c = 0; c < m; ++c) {
        if (!available[c] || ball[c] < quota_units) continue;
        if (best == m || ball[c] > ball[best]) best = c;
      }
      if (best == m || chosen.size() == k) break;

      SearStep step;
      step.candidate = best;
      step.radius = radius;
      step.ball_weight = ball[best];
      std::int64_t remaining = quota_units;
      for (std::size_t i = 0; i < n && remaining > 0; ++i) {
        if (weight[i] == 0 || instance.AgentToCandidate(i, best) > radius) {
          continue;
        }
        const std::int64_t take = std::min(weight[i], remaining);
        weight[i] -= take;
        remaining -= take;
        step.charges.push_back({i, take});
        for (std::size_t c = 0; c < m; ++c) {
          if (instance.AgentToCandidate(i, c) <= radius) ball[c] -= take;
        }
      }
      available[best] = 0;
      chosen.push_back(best);
      result.trace.push_back(std::move(step));
    }
  }
  result.selection = Selection::Create(chosen, m, k);
  result.final_weights = std::move(weight);
  return result;
}

}  // namespace propaudit
