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

#include "propaudit/approval.h"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "propaudit/errors.h"
#include "subsets.h"

namespace propaudit {
namespace {

using internal::Bits;
using internal::ForEachSubsetBySize;

QuotaCmp QuotaOf(const ApprovalInstance& instance) {
  return {static_cast<std::int64_t>(instance.num_voters),
          static_cast<std::int64_t>(instance.k)};
}

void CheckCommittee(const ApprovalInstance& instance,
                    const Selection& committee) {
  if (committee.size() != instance.k) {
    throw InputError("committee size differs from k");
  }
  if (!committee.centers().empty() &&
      committee.centers().back() >= instance.num_candidates) {
    throw InputError("committee member out of range");
  }
}

std::vector<Bits> BallotBits(const ApprovalInstance& instance) {
  std::vector<Bits> bits(instance.num_voters, Bits(instance.num_candidates));
  for (std::size_t i = 0; i < instance.num_voters; ++i) {
    for (std::size_t c : instance.approvals[i]) bits[i].Set(c);
  }
  return bits;
}

// Per voter, the committee positions (index into committee.centers()) the
// voter approves.
std::vector<std::uint64_t> CommitteeMasks(const ApprovalInstance& instance,
                                          const Selection& committee) {
  std::vector<std::uint64_t> masks(instance.num_voters, 0);
  const auto& centers = committee.centers();
  for (std::size_t i = 0; i < instance.num_voters; ++i) {
    for (std::size_t p = 0; p < centers.size(); ++p) {
      if (instance.Approves(i, centers[p])) masks[i] |= std::uint64_t{1} << p;
    }
  }
  return masks;
}

std::vector<std::size_t> Positions(const Selection& committee,
                                   std::uint64_t mask) {
  std::vector<std::size_t> out;
  for (std::size_t p : internal::BitIndices(mask)) {
    out.push_back(committee.centers()[p]);
  }
  return out;
}

}  // namespace

ApprovalInstance ApprovalInstance::Create(
    std::size_t num_voters, std::size_t num_candidates,
    std::vector<std::vector<std::size_t>> approvals, std::size_t k) {
  if (approvals.size() != num_voters) {
    throw InputError("approval list count differs from number of voters");
  }
  if (num_voters == 0) throw InputError("approval instance needs a voter");
  if (k == 0 || k > num_candidates) {
    throw InputError("k must lie in [1, number of candidates]");
  }
  for (auto& ballot : approvals) {
    std::sort(ballot.begin(), ballot.end());
    ballot.erase(std::unique(ballot.begin(), ballot.end()), ballot.end());
    if (!ballot.empty() && ballot.back() >= num_candidates) {
      throw InputError("approved candidate " + std::to_string(ballot.back()) +
                       " out of range");
    }
  }
  ApprovalInstance inst;
  inst.num_voters = num_voters;
  inst.num_candidates = num_candidates;
  inst.k = k;
  inst.approvals = std::move(approvals);
  return inst;
}

bool ApprovalInstance::Approves(std::size_t voter, std::size_t candidate) const {
  const auto& ballot = approvals[voter];
  return std::binary_search(ballot.begin(), ballot.end(), candidate);
}

bool BipartiteGraph::HasEdge(std::size_t u, std::size_t w) const {
  return std::find(edges.begin(), edges.end(), std::make_pair(u, w)) !=
         edges.end();
}

Verdict VerifyPjrBruteForce(const ApprovalInstance& instance,
                            const Selection& committee,
                            const ExhaustiveCaps& caps) {
  CheckCommittee(instance, committee);
  const std::size_t n = instance.num_voters;
  if (n > caps.max_voters || n >= 64) {
    throw SizeError("PJR brute force over " + std::to_string(n) +
                    " voters exceeds the cap of " +
                    std::to_string(caps.max_voters));
  }
  const QuotaCmp quota = QuotaOf(instance);
  const std::vector<Bits> ballots = BallotBits(instance);
  Bits selected(instance.num_candidates);
  for (std::size_t c : committee.centers()) selected.Set(c);

  std::vector<std::size_t> voters(n);
  for (std::size_t i = 0; i < n; ++i) voters[i] = i;

  Verdict verdict = Verdict::Satisfied("pjr", 1.0);
  ForEachSubsetBySize(
      static_cast<unsigned>(n), 1, static_cast<unsigned>(n),
      [&](std::uint64_t mask) {
        Bits common(instance.num_candidates);
        common.Fill(instance.num_candidates);
        Bits reached(instance.num_candidates);
        for (std::uint64_t m = mask; m != 0; m &= m - 1) {
          const auto i = static_cast<std::size_t>(std::countr_zero(m));
          common &= ballots[i];
          reached |= ballots[i];
        }
        const auto covered = static_cast<std::int64_t>(reached.CountAnd(selected));
        const std::int64_t level = covered + 1;
        const auto size = static_cast<std::int64_t>(std::popcount(mask));
        if (static_cast<std::int64_t>(common.Count()) >= level &&
            quota.AtLeast(size, level)) {
          Witness w;
          w.level = static_cast<int>(level);
          w.coalition = internal::PickByMask(voters, mask);
          for (std::size_t c : committee.centers()) {
            if (reached.Test(c)) w.covered.push_back(c);
          }
          verdict = Verdict::Violated("pjr", 1.0, std::move(w));
          return true;
        }
        return false;
      });
  return verdict;
}

Verdict VerifyPjrPlusSweep(const ApprovalInstance& instance,
                           const Selection& committee,
                           const ExhaustiveCaps& caps) {
  CheckCommittee(instance, committee);
  const std::size_t k = instance.k;
  if (k > caps.max_committee || k >= 64) {
    throw SizeError("PJR+ sweep over committee size " + std::to_string(k) +
                    " exceeds the cap of " + std::to_string(caps.max_committee));
  }
  const QuotaCmp quota = QuotaOf(instance);
  const std::vector<std::uint64_t> approved_in_committee =
      CommitteeMasks(instance, committee);
  const std::vector<char> in_committee =
      committee.Mask(instance.num_candidates);
  const std::uint64_t full = (std::uint64_t{1} << k) - 1;

  Verdict verdict = Verdict::Satisfied("pjr+", 1.0);
  std::vector<std::size_t> unserved;
  ForEachSubsetBySize(
      static_cast<unsigned>(k), 0, static_cast<unsigned>(k - 1),
      [&](std::uint64_t kept) {
        const std::uint64_t rest = full & ~kept;
        unserved.clear();
        for (std::size_t i = 0; i < instance.num_voters; ++i) {
          if ((approved_in_committee[i] & rest) == 0) unserved.push_back(i);
        }
        const std::int64_t level = std::popcount(kept) + 1;
        if (!quota.AtLeast(static_cast<std::int64_t>(unserved.size()), level)) {
          return false;
        }
        for (std::size_t c = 0; c < instance.num_candidates; ++c) {
          if (in_committee[c]) continue;
          std::vector<std::size_t> supporters;
          for (std::size_t i : unserved) {
            if (instance.Approves(i, c)) supporters.push_back(i);
          }
          if (quota.AtLeast(static_cast<std::int64_t>(supporters.size()),
                            level)) {
            Witness w;
            w.center = c;
            w.level = static_cast<int>(level);
            w.coalition = std::move(supporters);
            w.covered = Positions(committee, kept);
            verdict = Verdict::Violated("pjr+", 1.0, std::move(w));
            return true;
          }
        }
        return false;
      });
  return verdict;
}

Verdict VerifyFixedEllPjrPlusBruteForce(const ApprovalInstance& instance,
                                        const Selection& committee, int level,
                                        const ExhaustiveCaps& caps) {
  CheckCommittee(instance, committee);
  if (level < 1 || static_cast<std::size_t>(level) > instance.k) {
    throw InputError("level must lie in [1, k]");
  }
  if (instance.k >= 64) throw SizeError("committee too large for bitmasks");
  const QuotaCmp quota = QuotaOf(instance);
  const std::vector<std::uint64_t> approved_in_committee =
      CommitteeMasks(instance, committee);
  const std::vector<char> in_committee =
      committee.Mask(instance.num_candidates);

  // A violating group stays violating when shrunk (its union only loses
  // committee members), so groups of the minimum admissible size suffice.
  std::int64_t min_size = 1;
  while (!quota.AtLeast(min_size, level)) ++min_size;

  const std::string axiom = "fixed-ell-pjr+";
  for (std::size_t c = 0; c < instance.num_candidates; ++c) {
    if (in_committee[c]) continue;
    std::vector<std::size_t> supporters;
    for (std::size_t i = 0; i < instance.num_voters; ++i) {
      if (instance.Approves(i, c)) supporters.push_back(i);
    }
    if (static_cast<std::int64_t>(supporters.size()) < min_size) continue;
    if (supporters.size() > caps.max_voters) {
      throw SizeError("fixed-level PJR+ brute force over " +
                      std::to_string(supporters.size()) +
                      " supporters exceeds the cap");
    }
    std::optional<Witness> found;
    ForEachSubsetBySize(
        static_cast<unsigned>(supporters.size()),
        static_cast<unsigned>(min_size), static_cast<unsigned>(min_size),
        [&](std::uint64_t mask) {
          std::uint64_t reached = 0;
          for (std::uint64_t m = mask; m != 0; m &= m - 1) {
            reached |= approved_in_committee[supporters[std::countr_zero(m)]];
          }
          if (std::popcount(reached) < level) {
            Witness w;
            w.center = c;
            w.level = level;
            w.coalition = internal::PickByMask(supporters, mask);
            w.covered = Positions(committee, reached);
            found = std::move(w);
            return true;
          }
          return false;
        });
    if (found) return Verdict::Violated(axiom, 1.0, std::move(*found));
  }
  return Verdict::Satisfied(axiom, 1.0);
}

BicliqueReduction ReduceBalancedBiclique(const BipartiteGraph& graph, int t) {
  if (t < 1) throw InputError("biclique size t must be at least 1");
  for (const auto& [u, w] : graph.edges) {
    if (u >= graph.left || w >= graph.right) {
      throw InputError("edge references a missing vertex");
    }
  }
  const std::size_t side = std::max(
      {graph.left, graph.right, static_cast<std::size_t>(2 * t - 1)});
  const std::size_t universal = side - (2 * t - 1);
  const std::size_t padded_t = static_cast<std::size_t>(t) + universal;
  const std::size_t padded_side = side + universal;

  // Isolated filler occupies [original, side), universal vertices
  // [side, padded_side) and attach to everything on the other side.
  BipartiteGraph padded{padded_side, padded_side, graph.edges};
  for (std::size_t u = side; u < padded_side; ++u) {
    for (std::size_t w = 0; w < padded_side; ++w) padded.edges.emplace_back(u, w);
  }
  for (std::size_t w = side; w < padded_side; ++w) {
    for (std::size_t u = 0; u < side; ++u) padded.edges.emplace_back(u, w);
  }

  std::vector<std::vector<char>> adjacent(padded_side,
                                          std::vector<char>(padded_side, 0));
  for (const auto& [u, w] : padded.edges) adjacent[u][w] = 1;

  const std::size_t z = padded_side;
  std::vector<std::vector<std::size_t>> approvals(padded_side);
  for (std::size_t u = 0; u < padded_side; ++u) {
    for (std::size_t w = 0; w < padded_side; ++w) {
      if (!adjacent[u][w]) approvals[u].push_back(w);
    }
    approvals[u].push_back(z);
  }
  std::vector<std::size_t> committee(padded_side);
  for (std::size_t w = 0; w < padded_side; ++w) committee[w] = w;

  BicliqueReduction out{
      ApprovalInstance::Create(padded_side, padded_side + 1,
                               std::move(approvals), padded_side),
      Selection::Create(std::move(committee), padded_side + 1, padded_side),
      static_cast<int>(padded_t), std::move(padded)};
  return out;
}

std::optional<Biclique> FindBalancedBicliqueBruteForce(
    const BipartiteGraph& graph, int t, const ExhaustiveCaps& caps) {
  if (graph.left > caps.max_side || graph.right > caps.max_side ||
      graph.left >= 64 || graph.right >= 64) {
    throw SizeError("biclique brute force side exceeds the cap of " +
                    std::to_string(caps.max_side));
  }
  if (t < 1) throw InputError("biclique size t must be at least 1");
  const auto size = static_cast<std::size_t>(t);
  if (size > graph.left || size > graph.right) return std::nullopt;

  std::vector<std::uint64_t> neighbors(graph.left, 0);
  for (const auto& [u, w] : graph.edges) {
    if (u >= graph.left || w >= graph.right) {
      throw InputError("edge references a missing vertex");
    }
    neighbors[u] |= std::uint64_t{1} << w;
  }
  const std::uint64_t all_right =
      graph.right == 0 ? 0 : (~std::uint64_t{0} >> (64 - graph.right));

  std::optional<Biclique> found;
  ForEachSubsetBySize(
      static_cast<unsigned>(graph.left), static_cast<unsigned>(size),
      static_cast<unsigned>(size), [&](std::uint64_t left_mask) {
        std::uint64_t common = all_right;
        for (std::uint64_t m = left_mask; m != 0; m &= m - 1) {
          common &= neighbors[std::countr_zero(m)];
        }
        if (static_cast<std::size_t>(std::popcount(common)) < size) {
          return false;
        }
        Biclique b;
        b.left = internal::BitIndices(left_mask);
        for (std::size_t w : internal::BitIndices(common)) {
          if (b.right.size() == size) break;
          b.right.push_back(w);
        }
        found = std::move(b);
        return true;
      });
  return found;
}

}  // namespace propaudit
