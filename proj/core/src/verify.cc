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

#include "propaudit/verify.h"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>

#include "propaudit/errors.h"
#include "subsets.h"

namespace propaudit {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ElapsedMs() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

void CheckArguments(const Instance& instance, const Selection& selection,
                    double gamma) {
  if (!(gamma >= 1.0) || !std::isfinite(gamma)) {
    throw InputError("gamma must be a finite value >= 1");
  }
  if (selection.size() != instance.k()) {
    throw InputError("selection size differs from k");
  }
  if (!selection.centers().empty() &&
      selection.centers().back() >= instance.num_candidates()) {
    throw InputError("selection index out of range");
  }
}

// Agents of the instance ordered by distance from one candidate, ties by
// index.
struct AgentsByDistance {
  std::vector<std::size_t> order;
  std::vector<double> distance;

  void Sort(const Instance& instance, std::size_t center) {
    const std::size_t n = instance.num_agents();
    distance.resize(n);
    order.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      distance[i] = instance.AgentToCandidate(i, center);
    }
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return distance[a] < distance[b] ||
             (distance[a] == distance[b] && a < b);
    });
  }

  // End (exclusive) of the group of equal radii starting at `pos`.
  std::size_t GroupEnd(std::size_t pos, double epsilon) const {
    const double first = distance[order[pos]];
    std::size_t end = pos + 1;
    while (end < order.size() && distance[order[end]] - first <= epsilon) {
      ++end;
    }
    return end;
  }
};

std::vector<std::size_t> SortedPrefix(const std::vector<std::size_t>& order,
                                      std::size_t length) {
  std::vector<std::size_t> prefix(order.begin(), order.begin() + length);
  std::sort(prefix.begin(), prefix.end());
  return prefix;
}

}  // namespace

DefaultCoalition ComputeDefaultCoalition(const Instance& instance,
                                         std::size_t center, int level) {
  if (center >= instance.num_candidates()) {
    throw InputError("candidate id " + std::to_string(center) +
                     " out of range");
  }
  if (level < 1 || static_cast<std::size_t>(level) > instance.k()) {
    throw InfeasibleLevel("level " + std::to_string(level) +
                          " outside [1, k]: no ball holds level * n / k agents");
  }
  const QuotaCmp quota = QuotaOf(instance);
  AgentsByDistance agents;
  agents.Sort(instance, center);
  for (std::size_t pos = 0; pos < agents.order.size();) {
    const std::size_t end = agents.GroupEnd(pos, 0.0);
    if (quota.AtLeast(static_cast<std::int64_t>(end), level)) {
      return {center, level, agents.distance[agents.order[end - 1]],
              SortedPrefix(agents.order, end)};
    }
    pos = end;
  }
  // Unreachable for level <= k: the full agent set always meets the quota.
  throw InfeasibleLevel("no ball around the candidate reaches the quota");
}

Verdict VerifyDcMpjrPlus(const Instance& instance, const Selection& selection,
                         const VerifyOptions& options) {
  const Stopwatch timer;
  CheckArguments(instance, selection, options.gamma);
  const std::size_t m = instance.num_candidates();
  const std::vector<std::size_t>& centers = selection.centers();
  const std::size_t k = centers.size();
  const QuotaCmp quota = QuotaOf(instance);
  const std::vector<char> selected = selection.Mask(m);

  Verdict verdict = Verdict::Satisfied("dc-mpjr+", options.gamma);
  AgentsByDistance agents;
  std::vector<double> reach(k);
  for (std::size_t c = 0; c < m; ++c) {
    if (selected[c]) continue;
    agents.Sort(instance, c);
    std::fill(reach.begin(), reach.end(), kInf);
    std::int64_t previous_level = 0;
    for (std::size_t pos = 0; pos < agents.order.size();) {
      const std::size_t end = agents.GroupEnd(pos, options.tie_epsilon);
      const double rho = agents.distance[agents.order[end - 1]];
      for (std::size_t idx = pos; idx < end; ++idx) {
        const std::size_t i = agents.order[idx];
        for (std::size_t p = 0; p < k; ++p) {
          reach[p] = std::min(reach[p], instance.AgentToCandidate(i, centers[p]));
        }
      }
      pos = end;
      const std::int64_t deserved = quota.Level(static_cast<std::int64_t>(end));
      if (deserved == 0) continue;
      const double threshold = options.gamma * rho;
      std::int64_t coverage = 0;
      for (std::size_t p = 0; p < k; ++p) coverage += reach[p] <= threshold;
      if (coverage < deserved) {
        Witness w;
        w.center = c;
        w.level = static_cast<int>(deserved);
        w.radius = rho;
        w.coalition = SortedPrefix(agents.order, end);
        for (std::size_t p = 0; p < k; ++p) {
          if (reach[p] <= threshold) w.covered.push_back(centers[p]);
        }
        if (!options.all_witnesses) {
          verdict = Verdict::Violated("dc-mpjr+", options.gamma, std::move(w));
          verdict.elapsed_ms = timer.ElapsedMs();
          return verdict;
        }
        // Levels whose default coalition is this prefix and that lack
        // coverage.
        for (std::int64_t level = std::max(previous_level, coverage) + 1;
             level <= deserved; ++level) {
          Witness each = w;
          each.level = static_cast<int>(level);
          verdict.all_witnesses.push_back(std::move(each));
        }
        if (!verdict.witness) verdict.witness = std::move(w);
        verdict.satisfied = false;
      }
      previous_level = deserved;
    }
  }
  verdict.elapsed_ms = timer.ElapsedMs();
  return verdict;
}

Verdict VerifyFixedEllDc(const Instance& instance, const Selection& selection,
                         int level, const VerifyOptions& options) {
  const Stopwatch timer;
  CheckArguments(instance, selection, options.gamma);
  if (level < 1 || static_cast<std::size_t>(level) > instance.k()) {
    throw InfeasibleLevel("level " + std::to_string(level) +
                          " outside [1, k]");
  }
  const std::size_t m = instance.num_candidates();
  const std::vector<std::size_t>& centers = selection.centers();
  const std::size_t k = centers.size();
  const QuotaCmp quota = QuotaOf(instance);
  const std::vector<char> selected = selection.Mask(m);

  AgentsByDistance agents;
  std::vector<double> reach(k);
  for (std::size_t c = 0; c < m; ++c) {
    if (selected[c]) continue;
    agents.Sort(instance, c);
    std::fill(reach.begin(), reach.end(), kInf);
    for (std::size_t pos = 0; pos < agents.order.size();) {
      const std::size_t end = agents.GroupEnd(pos, options.tie_epsilon);
      const double rho = agents.distance[agents.order[end - 1]];
      for (std::size_t idx = pos; idx < end; ++idx) {
        const std::size_t i = agents.order[idx];
        for (std::size_t p = 0; p < k; ++p) {
          reach[p] = std::min(reach[p], instance.AgentToCandidate(i, centers[p]));
        }
      }
      pos = end;
      if (quota.Level(static_cast<std::int64_t>(end)) < level) continue;
      const double threshold = options.gamma * rho;
      Witness w;
      for (std::size_t p = 0; p < k; ++p) {
        if (reach[p] <= threshold) w.covered.push_back(centers[p]);
      }
      if (static_cast<int>(w.covered.size()) < level) {
        w.center = c;
        w.level = level;
        w.radius = rho;
        w.coalition = SortedPrefix(agents.order, end);
        Verdict verdict = Verdict::Violated("fixed-ell-dc", options.gamma,
                                            std::move(w));
        verdict.elapsed_ms = timer.ElapsedMs();
        return verdict;
      }
      break;
    }
  }
  Verdict verdict = Verdict::Satisfied("fixed-ell-dc", options.gamma);
  verdict.elapsed_ms = timer.ElapsedMs();
  return verdict;
}

Verdict VerifyMpjrPlusSmallK(const Instance& instance,
                             const Selection& selection,
                             const VerifyOptions& options) {
  const Stopwatch timer;
  CheckArguments(instance, selection, options.gamma);
  const std::size_t k = selection.size();
  if (k > options.max_k || k >= 64) {
    throw SizeError("small-k mPJR+ verifier: k = " + std::to_string(k) +
                    " exceeds the cap of " + std::to_string(options.max_k));
  }
  const std::size_t n = instance.num_agents();
  const std::size_t m = instance.num_candidates();
  const std::vector<std::size_t>& centers = selection.centers();
  const QuotaCmp quota = QuotaOf(instance);
  const std::vector<char> selected = selection.Mask(m);
  const double gamma = options.gamma;

  // to_center[p * n + i] = d(i, X[p])
  std::vector<double> to_center(k * n);
  for (std::size_t p = 0; p < k; ++p) {
    for (std::size_t i = 0; i < n; ++i) {
      to_center[p * n + i] = instance.AgentToCandidate(i, centers[p]);
    }
  }
  // Intervals live in the gamma-scaled coordinate s = gamma * r: agent i
  // covers [lower_i, upper_i). Agents are pre-sorted by lower endpoint per
  // candidate and by upper endpoint once per subset, so each (subset,
  // candidate) sweep is a linear merge. An upper endpoint goes first at equal
  // values, which makes the intervals half-open.
  constexpr std::size_t kCacheEntries = std::size_t{1} << 22;
  const bool cache_lower = m * n <= kCacheEntries;
  std::vector<double> lower_cache;
  std::vector<std::uint32_t> lower_order_cache;
  std::vector<double> lower_scratch(n);
  std::vector<std::uint32_t> order_scratch(n);
  auto fill_lower = [&](std::size_t c, double* lower, std::uint32_t* order) {
    for (std::size_t i = 0; i < n; ++i) {
      lower[i] = gamma * instance.AgentToCandidate(i, c);
      order[i] = static_cast<std::uint32_t>(i);
    }
    std::sort(order, order + n, [lower](std::uint32_t a, std::uint32_t b) {
      return lower[a] < lower[b] || (lower[a] == lower[b] && a < b);
    });
  };
  if (cache_lower) {
    lower_cache.resize(m * n);
    lower_order_cache.resize(m * n);
    for (std::size_t c = 0; c < m; ++c) {
      if (!selected[c]) {
        fill_lower(c, &lower_cache[c * n], &lower_order_cache[c * n]);
      }
    }
  }
  std::vector<double> upper(n);
  std::vector<std::uint32_t> upper_order(n);
  const std::uint64_t full =
      k == 0 ? 0 : (~std::uint64_t{0} >> (64 - k));

  Verdict verdict = Verdict::Satisfied("mpjr+", gamma);
  internal::ForEachSubsetBySize(
      static_cast<unsigned>(k), 0, static_cast<unsigned>(k == 0 ? 0 : k - 1),
      [&](std::uint64_t kept) {
        if (k == 0) return false;
        const std::uint64_t rest = full & ~kept;
        std::fill(upper.begin(), upper.end(), kInf);
        for (std::uint64_t r = rest; r != 0; r &= r - 1) {
          const double* row = &to_center[std::countr_zero(r) * n];
          for (std::size_t i = 0; i < n; ++i) {
            upper[i] = std::min(upper[i], row[i]);
          }
        }
        bool upper_sorted = false;
        const std::int64_t level = std::popcount(kept) + 1;
        for (std::size_t c = 0; c < m; ++c) {
          if (selected[c]) continue;
          const double* lower = lower_scratch.data();
          const std::uint32_t* lower_order = order_scratch.data();
          if (cache_lower) {
            lower = &lower_cache[c * n];
            lower_order = &lower_order_cache[c * n];
          } else {
            fill_lower(c, lower_scratch.data(), order_scratch.data());
          }
          std::int64_t intervals = 0;
          for (std::size_t i = 0; i < n; ++i) intervals += lower[i] < upper[i];
          if (!quota.AtLeast(intervals, level)) continue;
          if (!upper_sorted) {
            for (std::size_t i = 0; i < n; ++i) {
              upper_order[i] = static_cast<std::uint32_t>(i);
            }
            std::sort(upper_order.begin(), upper_order.end(),
                      [&](std::uint32_t a, std::uint32_t b) {
                        return upper[a] < upper[b];
                      });
            upper_sorted = true;
          }
          std::int64_t depth = 0;
          std::size_t u = 0;
          for (std::size_t j = 0; j < n; ++j) {
            const std::uint32_t agent = lower_order[j];
            const double s = lower[agent];
            if (!(s < upper[agent])) continue;
            for (; u < n && upper[upper_order[u]] <= s; ++u) {
              const std::uint32_t q = upper_order[u];
              depth -= lower[q] < upper[q];
            }
            ++depth;
            if (!quota.AtLeast(depth, level)) continue;
            // Violation at s: every agent whose interval holds s.
            Witness w;
            w.center = c;
            w.level = static_cast<int>(level);
            w.radius = instance.AgentToCandidate(agent, c);
            for (std::size_t i = 0; i < n; ++i) {
              if (lower[i] <= s && s < upper[i]) w.coalition.push_back(i);
            }
            for (std::size_t p : internal::BitIndices(kept)) {
              w.covered.push_back(centers[p]);
            }
            verdict = Verdict::Violated("mpjr+", gamma, std::move(w));
            return true;
          }
        }
        return false;
      });
  verdict.elapsed_ms = timer.ElapsedMs();
  return verdict;
}

}  // namespace propaudit
