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

#include "propaudit/baselines.h"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>

#include "propaudit/errors.h"
#include "propaudit/generators.h"
#include "propaudit/rng.h"
#include "subsets.h"

namespace propaudit {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double NearestDistance(const Instance& instance,
                       const std::vector<std::size_t>& centers,
                       std::size_t agent) {
  double best = kInf;
  for (std::size_t x : centers) {
    best = std::min(best, instance.AgentToCandidate(agent, x));
  }
  return best;
}

double KMedianCostOf(const Instance& instance,
                     const std::vector<std::size_t>& centers) {
  double total = 0.0;
  for (std::size_t i = 0; i < instance.num_agents(); ++i) {
    total += NearestDistance(instance, centers, i);
  }
  return total;
}

// One best-improvement local search run from `start`.
std::vector<std::size_t> SwapDescent(const Instance& instance,
                                     std::vector<std::size_t> current) {
  const std::size_t m = instance.num_candidates();
  double cost = KMedianCostOf(instance, current);
  for (;;) {
    std::vector<char> selected(m, 0);
    for (std::size_t x : current) selected[x] = 1;
    double best_cost = cost;
    std::size_t best_slot = current.size();
    std::size_t best_in = m;
    for (std::size_t slot = 0; slot < current.size(); ++slot) {
      for (std::size_t u = 0; u < m; ++u) {
        if (selected[u]) continue;
        std::vector<std::size_t> trial = current;
        trial[slot] = u;
        const double trial_cost = KMedianCostOf(instance, trial);
        if (trial_cost < best_cost) {
          best_cost = trial_cost;
          best_slot = slot;
          best_in = u;
        }
      }
    }
    if (best_slot == current.size()) return current;
    current[best_slot] = best_in;
    cost = best_cost;
  }
}

double SquaredDistanceToCandidate(const Instance& instance,
                                  const std::vector<double>& point,
                                  std::size_t candidate) {
  const std::span<const double> pos = instance.candidate_position(candidate);
  double sum = 0.0;
  for (std::size_t t = 0; t < point.size(); ++t) {
    const double diff = point[t] - pos[t];
    sum += diff * diff;
  }
  return sum;
}

std::vector<std::size_t> LloydRun(const Instance& instance,
                                  std::vector<std::size_t> centers,
                                  std::size_t max_iterations) {
  const std::size_t n = instance.num_agents();
  const std::size_t m = instance.num_candidates();
  const std::size_t dim = instance.dim();
  const std::size_t k = centers.size();
  for (std::size_t iter = 0; iter < max_iterations; ++iter) {
    std::vector<std::vector<double>> sums(k, std::vector<double>(dim, 0.0));
    std::vector<std::size_t> sizes(k, 0);
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t owner = 0;
      double best = kInf;
      for (std::size_t p = 0; p < k; ++p) {
        const double d = instance.AgentToCandidate(i, centers[p]);
        if (d < best) {
          best = d;
          owner = p;
        }
      }
      const std::span<const double> pos = instance.agent_position(i);
      for (std::size_t t = 0; t < dim; ++t) sums[owner][t] += pos[t];
      ++sizes[owner];
    }
    std::vector<char> taken(m, 0);
    std::vector<std::size_t> next(k);
    for (std::size_t p = 0; p < k; ++p) {
      if (sizes[p] == 0) {
        // Empty cluster keeps its center unless a previous cluster took it.
        if (!taken[centers[p]]) {
          next[p] = centers[p];
          taken[next[p]] = 1;
          continue;
        }
        sums[p].assign(instance.candidate_position(centers[p]).begin(),
                       instance.candidate_position(centers[p]).end());
        sizes[p] = 1;
      }
      for (double& v : sums[p]) v /= static_cast<double>(sizes[p]);
      std::size_t snap = m;
      double best = kInf;
      for (std::size_t c = 0; c < m; ++c) {
        if (taken[c]) continue;
        const double d = SquaredDistanceToCandidate(instance, sums[p], c);
        if (d < best) {
          best = d;
          snap = c;
        }
      }
      next[p] = snap;
      taken[snap] = 1;
    }
    std::vector<std::size_t> before = centers;
    std::vector<std::size_t> after = next;
    std::sort(before.begin(), before.end());
    std::sort(after.begin(), after.end());
    centers = std::move(next);
    if (before == after) break;
  }
  return centers;
}

// k-means++ style seeding over the candidate set: the first center is
// uniform, each further one is drawn with probability proportional to its
// squared distance from the centers picked so far.
std::vector<std::size_t> SeedCenters(const Instance& instance,
                                     std::uint64_t seed) {
  const std::size_t m = instance.num_candidates();
  CounterRng rng(seed);
  std::vector<std::size_t> picked{static_cast<std::size_t>(rng.NextBelow(m))};
  std::vector<double> nearest(m, kInf);
  while (picked.size() < instance.k()) {
    double total = 0.0;
    for (std::size_t c = 0; c < m; ++c) {
      const double d =
          instance.Distance(Candidate(c), Candidate(picked.back()));
      nearest[c] = std::min(nearest[c], d * d);
      total += nearest[c];
    }
    std::size_t choice = m;
    if (total > 0.0) {
      double target = rng.NextUniform() * total;
      for (std::size_t c = 0; c < m; ++c) {
        if (nearest[c] <= 0.0) continue;
        choice = c;
        target -= nearest[c];
        if (target < 0.0) break;
      }
    }
    if (choice == m) {
      // Every remaining candidate coincides with a picked one.
      std::vector<std::size_t> rest;
      for (std::size_t c = 0; c < m; ++c) {
        if (std::find(picked.begin(), picked.end(), c) == picked.end()) {
          rest.push_back(c);
        }
      }
      choice = rest[rng.NextBelow(rest.size())];
    }
    nearest[choice] = 0.0;
    picked.push_back(choice);
  }
  return picked;
}

}  // namespace

double KMedianCost(const Instance& instance, const Selection& selection) {
  return KMedianCostOf(instance, selection.centers());
}

double KMeansCost(const Instance& instance, const Selection& selection) {
  double total = 0.0;
  for (std::size_t i = 0; i < instance.num_agents(); ++i) {
    const double d = NearestDistance(instance, selection.centers(), i);
    total += d * d;
  }
  return total;
}

Selection KMedianExhaustive(const Instance& instance,
                            std::size_t max_candidates) {
  const std::size_t m = instance.num_candidates();
  if (m > max_candidates || m >= 64) {
    throw SizeError("exhaustive k-median over " + std::to_string(m) +
                    " candidates exceeds the cap of " +
                    std::to_string(max_candidates));
  }
  std::vector<std::size_t> all(m);
  for (std::size_t c = 0; c < m; ++c) all[c] = c;
  std::vector<std::size_t> best;
  double best_cost = kInf;
  const auto k = static_cast<unsigned>(instance.k());
  internal::ForEachSubsetBySize(static_cast<unsigned>(m), k, k,
                                [&](std::uint64_t mask) {
                                  std::vector<std::size_t> trial =
                                      internal::PickByMask(all, mask);
                                  const double cost =
                                      KMedianCostOf(instance, trial);
                                  if (cost < best_cost) {
                                    best_cost = cost;
                                    best = std::move(trial);
                                  }
                                  return false;
                                });
  return Selection::For(instance, std::move(best));
}

Selection KMedianLocalSearch(const Instance& instance,
                             const BaselineOptions& options) {
  if (options.exhaustive) {
    return KMedianExhaustive(instance, options.exhaustive_max_candidates);
  }
  const std::size_t restarts = std::max<std::size_t>(1, options.restarts);
  std::vector<std::size_t> best;
  double best_cost = kInf;
  for (std::size_t r = 0; r < restarts; ++r) {
    const Selection start = SampleSelection(
        instance.num_candidates(), instance.k(), DeriveSeed(options.seed, r));
    std::vector<std::size_t> local = SwapDescent(instance, start.centers());
    const double cost = KMedianCostOf(instance, local);
    if (cost < best_cost) {
      best_cost = cost;
      best = std::move(local);
    }
  }
  return Selection::For(instance, std::move(best));
}

Selection KMeansLloydSnapped(const Instance& instance,
                             const BaselineOptions& options) {
  if (instance.kind() != MetricKind::kEuclidean) {
    throw UnsupportedBackend("k-means needs coordinates (euclidean backend)");
  }
  const std::size_t restarts = std::max<std::size_t>(1, options.restarts);
  std::optional<Selection> best;
  double best_cost = kInf;
  for (std::size_t r = 0; r < restarts; ++r) {
    Selection result = Selection::For(
        instance, LloydRun(instance, SeedCenters(instance,
                                                 DeriveSeed(options.seed, r)),
                           options.max_iterations));
    const double cost = KMeansCost(instance, result);
    if (cost < best_cost) {
      best_cost = cost;
      best = std::move(result);
    }
  }
  return *best;
}

}  // namespace propaudit
