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

#ifndef PROPAUDIT_APPROVAL_H_
#define PROPAUDIT_APPROVAL_H_

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "propaudit/instance.h"
#include "propaudit/verdict.h"

namespace propaudit {

// Multiwinner election with approval ballots (N, M, (A_i), k).
struct ApprovalInstance {
  std::size_t num_voters = 0;
  std::size_t num_candidates = 0;
  std::size_t k = 0;
  // Sorted, duplicate-free candidate indices per voter.
  std::vector<std::vector<std::size_t>> approvals;

  // Normalizes each ballot and throws InputError on out-of-range candidates,
  // a ballot count different from num_voters, or k outside [1, m].
  static ApprovalInstance Create(std::size_t num_voters,
                                 std::size_t num_candidates,
                                 std::vector<std::vector<std::size_t>> approvals,
                                 std::size_t k);

  bool Approves(std::size_t voter, std::size_t candidate) const;
};

struct BipartiteGraph {
  std::size_t left = 0;
  std::size_t right = 0;
  // (u, w) with u < left, w < right.
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  bool HasEdge(std::size_t u, std::size_t w) const;
};

// Enumeration limits for the exhaustive routines. Exceeding one throws
// SizeError rather than running for hours.
struct ExhaustiveCaps {
  std::size_t max_voters = 16;
  std::size_t max_committee = 24;
  std::size_t max_side = 16;
};

// PJR by enumerating every voter group. Witness: (level, coalition).
Verdict VerifyPjrBruteForce(const ApprovalInstance& instance,
                            const Selection& committee,
                            const ExhaustiveCaps& caps = {});

// PJR+ in O(2^k (nk + nm)): for every proper subset Y of the committee, the
// voters approving nothing in X \ Y are counted per unselected candidate.
// Witness: (center, level = |Y| + 1, coalition, covered = Y).
Verdict VerifyPjrPlusSweep(const ApprovalInstance& instance,
                           const Selection& committee,
                           const ExhaustiveCaps& caps = {});

// Fixed-level PJR+ by enumerating, for each unselected c, every group of
// voters approving c. level must lie in [1, k].
Verdict VerifyFixedEllPjrPlusBruteForce(const ApprovalInstance& instance,
                                        const Selection& committee, int level,
                                        const ExhaustiveCaps& caps = {});

struct BicliqueReduction {
  ApprovalInstance instance;
  Selection committee;
  int level = 0;
  // The graph after isolated and universal padding; both sides have
  // 2 * level - 1 vertices. Vertices of the input keep their indices.
  BipartiteGraph padded;
};

// Maps (G, t) to a fixed-level PJR+ instance that is violated iff G has a
// t x t biclique. Voters are the left vertices, candidates are the right
// vertices followed by the extra candidate z, the committee is every right
// vertex and k = |committee|. Throws InputError for t < 1.
BicliqueReduction ReduceBalancedBiclique(const BipartiteGraph& graph, int t);

struct Biclique {
  std::vector<std::size_t> left;
  std::vector<std::size_t> right;
};

// First t x t complete bipartite subgraph in (left subset by popcount then
// bitmask) order, or nullopt.
std::optional<Biclique> FindBalancedBicliqueBruteForce(
    const BipartiteGraph& graph, int t, const ExhaustiveCaps& caps = {});

}  // namespace propaudit

#endif  // PROPAUDIT_APPROVAL_H_
