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

#include "propaudit/oracle.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>

#include "propaudit/approval.h"
#include "propaudit/errors.h"
#include "subsets.h"

namespace propaudit {
namespace {

void CheckSelection(const Instance& instance, const Selection& selection) {
  if (selection.size() != instance.k()) {
    throw InputError("selection size differs from k");
  }
  if (!selection.centers().empty() &&
      selection.centers().back() >= instance.num_candidates()) {
    throw InputError("selection index out of range");
  }
}

void CheckAgentCap(const Instance& instance, const OracleCaps& caps) {
  if (instance.num_agents() > caps.max_agents ||
      instance.num_agents() >= 64) {
    throw SizeError("oracle enumerates 2^n groups; n = " +
                    std::to_string(instance.num_agents()) +
                    " exceeds the cap of " + std::to_string(caps.max_agents));
  }
}

std::vector<std::size_t> AllAgents(const Instance& instance) {
  std::vector<std::size_t> agents(instance.num_agents());
  for (std::size_t i = 0; i < agents.size(); ++i) agents[i] = i;
  return agents;
}

// Selected centers within `radius` of some member of `group`.
std::vector<std::size_t> ReachedCenters(const Instance& instance,
                                        const Selection& selection,
                                        const std::vector<std::size_t>& group,
                                        double radius) {
  std::vector<std::size_t> reached;
  for (std::size_t x : selection.centers()) {
    for (std::size_t i : group) {
      if (instance.AgentToCandidate(i, x) <= radius) {
        reached.push_back(x);
        break;
      }
    }
  }
  return reached;
}

// Shared by the anchored oracles: first (c, S) in (candidate, group size,
// bitmask) order with |S| k >= level n and fewer than level reached centers.
// With fixed_level == 0 the level is coverage + 1.
Verdict AnchoredSearch(const Instance& instance, const Selection& selection,
                       double gamma, int fixed_level, const OracleCaps& caps,
                       const std::string& axiom) {
  CheckSelection(instance, selection);
  CheckAgentCap(instance, caps);
  if (!(gamma >= 1.0) || !std::isfinite(gamma)) {
    throw InputError("gamma must be a finite value >= 1");
  }
  const QuotaCmp quota = QuotaOf(instance);
  const std::size_t n = instance.num_agents();
  const std::vector<std::size_t> agents = AllAgents(instance);

  for (std::size_t c = 0; c < instance.num_candidates(); ++c) {
    if (selection.Contains(c)) continue;
    std::optional<Witness> found;
    internal::ForEachSubsetBySize(
        static_cast<unsigned>(n), 1, static_cast<unsigned>(n),
        [&](std::uint64_t mask) {
          const std::vector<std::size_t> group =
              internal::PickByMask(agents, mask);
          double radius = 0.0;
          for (std::size_t i : group) {
            radius = std::max(radius, instance.AgentToCandidate(i, c));
          }
          std::vector<std::size_t> reached =
              ReachedCenters(instance, selection, group, gamma * radius);
          const auto coverage = static_cast<std::int64_t>(reached.size());
          const std::int64_t level =
              fixed_level > 0 ? fixed_level : coverage + 1;
          if (coverage >= level ||
              !quota.AtLeast(static_cast<std::int64_t>(group.size()), level)) {
            return false;
          }
          Witness w;
          w.center = c;
          w.level = static_cast<int>(level);
          w.radius = radius;
          w.coalition = group;
          w.covered = std::move(reached);
          found = std::move(w);
          return true;
        });
    if (found) return Verdict::Violated(axiom, gamma, std::move(*found));
  }
  return Verdict::Satisfied(axiom, gamma);
}

}  // namespace

Verdict OracleMpjr(const Instance& instance, const Selection& selection,
                   const OracleCaps& caps) {
  CheckSelection(instance, selection);
  CheckAgentCap(instance, caps);
  const std::size_t n = instance.num_agents();
  const std::size_t m = instance.num_candidates();

  // Approval sets only change at these radii.
  std::vector<double> radii;
  radii.reserve(n * m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < m; ++c) {
      radii.push_back(instance.AgentToCandidate(i, c));
    }
  }
  std::sort(radii.begin(), radii.end());
  radii.erase(std::unique(radii.begin(), radii.end()), radii.end());

  ExhaustiveCaps pjr_caps;
  pjr_caps.max_voters = caps.max_agents;
  for (double r : radii) {
    std::vector<std::vector<std::size_t>> ballots(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t c = 0; c < m; ++c) {
        if (instance.AgentToCandidate(i, c) <= r) ballots[i].push_back(c);
      }
    }
    const ApprovalInstance at_radius =
        ApprovalInstance::Create(n, m, std::move(ballots), instance.k());
    Verdict pjr = VerifyPjrBruteForce(at_radius, selection, pjr_caps);
    if (!pjr.satisfied) {
      pjr.witness->radius = r;
      return Verdict::Violated("mpjr-oracle", 1.0, std::move(*pjr.witness));
    }
  }
  return Verdict::Satisfied("mpjr-oracle", 1.0);
}

Verdict OracleMpjrPlus(const Instance& instance, const Selection& selection,
                       double gamma, const OracleCaps& caps) {
  return AnchoredSearch(instance, selection, gamma, 0, caps,
                        "mpjr+-oracle");
}

Verdict OracleFixedEllMpjrPlus(const Instance& instance,
                               const Selection& selection, int level,
                               const OracleCaps& caps) {
  if (level < 1 || static_cast<std::size_t>(level) > instance.k()) {
    throw InputError("level must lie in [1, k]");
  }
  return AnchoredSearch(instance, selection, 1.0, level, caps,
                        "fixed-ell-mpjr+-oracle");
}

Verdict OracleDc(const Instance& instance, const Selection& selection,
                 double gamma) {
  CheckSelection(instance, selection);
  if (!(gamma >= 1.0) || !std::isfinite(gamma)) {
    throw InputError("gamma must be a finite value >= 1");
  }
  const QuotaCmp quota = QuotaOf(instance);
  const std::size_t n = instance.num_agents();
  const auto k = static_cast<int>(instance.k());

  for (std::size_t c = 0; c < instance.num_candidates(); ++c) {
    if (selection.Contains(c)) continue;
    for (int level = 1; level <= k; ++level) {
      // r_{c,level}: smallest agent distance whose closed ball meets the
      // quota, found by trying every agent distance.
      double radius = std::numeric_limits<double>::infinity();
      for (std::size_t a = 0; a < n; ++a) {
        const double candidate_radius = instance.AgentToCandidate(a, c);
        std::int64_t inside = 0;
        for (std::size_t i = 0; i < n; ++i) {
          inside += instance.AgentToCandidate(i, c) <= candidate_radius;
        }
        if (quota.AtLeast(inside, level)) {
          radius = std::min(radius, candidate_radius);
        }
      }
      std::vector<std::size_t> members;
      for (std::size_t i = 0; i < n; ++i) {
        if (instance.AgentToCandidate(i, c) <= radius) members.push_back(i);
      }
      std::vector<std::size_t> reached =
          ReachedCenters(instance, selection, members, gamma * radius);
      if (static_cast<int>(reached.size()) < level) {
        Witness w;
        w.center = c;
        w.level = level;
        w.radius = radius;
        w.coalition = std::move(members);
        w.covered = std::move(reached);
        return Verdict::Violated("dc-oracle", gamma, std::move(w));
      }
    }
  }
  return Verdict::Satisfied("dc-oracle", gamma);
}

long long ScaledCoverageObjective(const Instance& instance,
                                  std::size_t coverage, std::size_t size) {
  return static_cast<long long>(coverage) *
             static_cast<long long>(instance.num_agents()) -
         static_cast<long long>(size) * static_cast<long long>(instance.k());
}

SubmodularMinimum SubmodularMinCheck(const Instance& instance,
                                     const Selection& selection,
                                     std::size_t center, double radius,
                                     const OracleCaps& caps) {
  CheckSelection(instance, selection);
  if (center >= instance.num_candidates()) {
    throw InputError("candidate id out of range");
  }
  SubmodularMinimum result;
  for (std::size_t i = 0; i < instance.num_agents(); ++i) {
    if (instance.AgentToCandidate(i, center) <= radius) result.ball.push_back(i);
  }
  const std::size_t b = result.ball.size();
  if (b > caps.max_ball || b >= 32) {
    throw SizeError("ball of " + std::to_string(b) +
                    " agents exceeds the exhaustive cap of " +
                    std::to_string(caps.max_ball));
  }
  const std::vector<std::size_t>& centers = selection.centers();
  if (centers.size() >= 64) throw SizeError("selection too large for bitmasks");

  // Centers each ball member reaches within `radius`, as bitmasks over the
  // selection.
  std::vector<std::uint64_t> reach_of(b, 0);
  for (std::size_t j = 0; j < b; ++j) {
    for (std::size_t p = 0; p < centers.size(); ++p) {
      if (instance.AgentToCandidate(result.ball[j], centers[p]) <= radius) {
        reach_of[j] |= std::uint64_t{1} << p;
      }
    }
  }
  const std::uint64_t count = std::uint64_t{1} << b;
  std::vector<std::uint64_t> reached(count, 0);
  long long best = 0;  // f(empty set) = 0
  std::uint64_t best_mask = 0;
  for (std::uint64_t mask = 1; mask < count; ++mask) {
    reached[mask] = reached[mask & (mask - 1)] | reach_of[std::countr_zero(mask)];
    const long long value = ScaledCoverageObjective(
        instance, static_cast<std::size_t>(std::popcount(reached[mask])),
        static_cast<std::size_t>(std::popcount(mask)));
    if (value < best) {
      best = value;
      best_mask = mask;
    }
  }
  result.minimizer = internal::PickByMask(result.ball, best_mask);
  result.coverage = static_cast<std::size_t>(std::popcount(reached[best_mask]));
  result.size = result.minimizer.size();
  result.violation = best <= -static_cast<long long>(instance.num_agents());
  return result;
}

}  // namespace propaudit
