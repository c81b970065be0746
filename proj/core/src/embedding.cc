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

#include "propaudit/embedding.h"

#include <algorithm>
#include <limits>
#include <string>
#include <utility>

namespace propaudit {

Instance EmbedApproval(const ApprovalInstance& approval) {
  std::vector<std::string> agents(approval.num_voters);
  std::vector<std::string> candidates(approval.num_candidates);
  for (std::size_t i = 0; i < agents.size(); ++i) {
    agents[i] = "v" + std::to_string(i);
  }
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    candidates[c] = "c" + std::to_string(c);
  }
  return EmbedApproval(approval, std::move(agents), std::move(candidates));
}

Instance EmbedApproval(const ApprovalInstance& approval,
                       std::vector<std::string> agent_names,
                       std::vector<std::string> candidate_names) {
  const std::size_t n = approval.num_voters;
  const std::size_t m = approval.num_candidates;
  const std::size_t total = n + m;

  // Bipartite edge weights: 1 for approval, 2 otherwise.
  std::vector<double> edge(n * m, 2.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c : approval.approvals[i]) edge[i * m + c] = 1.0;
  }

  std::vector<double> matrix(total * total, 0.0);
  auto set = [&](std::size_t u, std::size_t v, double d) {
    matrix[u * total + v] = d;
    matrix[v * total + u] = d;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < m; ++c) set(i, n + c, edge[i * m + c]);
  }
  // Any path longer than two hops weighs at least 4, the two-hop maximum, so
  // the two-hop minimum is the shortest-path distance.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t c = 0; c < m; ++c) {
        best = std::min(best, edge[i * m + c] + edge[j * m + c]);
      }
      set(i, j, best);
    }
  }
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < n; ++i) {
        best = std::min(best, edge[i * m + a] + edge[i * m + b]);
      }
      set(n + a, n + b, best);
    }
  }
  return Instance::Explicit(std::move(agent_names), std::move(candidate_names),
                            std::move(matrix), approval.k);
}

}  // namespace propaudit
